#include "icl/family.hpp"

#include <stdexcept>

namespace icl {

namespace {

struct Evaluation {
    DerivedParams derived;
    std::optional<std::string> error;
};

std::string num(int v) { return std::to_string(v); }

// Appends "requires <what>, but a ∤ b" if a does not divide b.
bool divides(int a, int b, std::string_view what, std::optional<std::string>& error) {
    if (a > 0 && b % a == 0) return true;
    error = "requires " + std::string(what) + ", but " + num(a) + " ∤ " + num(b);
    return false;
}

Evaluation evaluate(Family f, int k, int d, std::optional<int> lambda, int m) {
    Evaluation ev;
    auto& err = ev.error;
    auto& out = ev.derived;
    auto fail = [&](std::string msg) {
        err = std::move(msg);
        return ev;
    };

    if (m < 1) return fail("lift multiplicity m must be at least 1");
    if (k < 2) return fail("K must be at least 2");
    if (d < 1 || d > k - 1) return fail("D must lie in [1, K-1], got D=" + num(d));
    if (family_uses_lambda(f)) {
        if (!lambda) return fail("lambda is required");
        if (*lambda < 1) return fail("lambda must be at least 1");
    } else if (lambda) {
        return fail("takes no lambda parameter");
    }
    const int lam = lambda.value_or(0);

    switch (f) {
    case Family::case1:
        if (!divides(d, k, "D | K", err)) return ev;
        out.n = k / d;
        break;
    case Family::case2: {
        const int r = k - d;
        if (!divides(r, k, "(K-D) | K", err)) return ev;
        out.r = r;
        out.n = k / r;
        break;
    }
    case Family::case6: {
        const int r = k - d;
        if (!divides(lam, r, "lambda | (K-D)", err)) return ev;
        if (!divides(r, k - lam, "(K-D) | (K-lambda)", err)) return ev;
        out.r = r;
        out.q = (k - lam) / r;
        break;
    }
    case Family::case8: {
        const int r = k - d;
        if (!divides(lam, r, "lambda | (K-D)", err)) return ev;
        if (!divides(r + lam, k, "(K-D+lambda) | K", err)) return ev;
        out.r = r;
        out.p = k / (r + lam);
        break;
    }
    case Family::case10: {
        const int r = k - d;
        if (!divides(lam, r, "lambda | (K-D)", err)) return ev;
        if (!divides(r, k + lam, "(K-D) | (K+lambda)", err)) return ev;
        // lambda == K-D (s == 1) makes the first and third symbol sets overlap,
        // giving 2(K-D) symbols; the construction needs s >= 2.
        if (lam >= r) return fail("requires lambda < K-D, but lambda=" + num(lam) + ", K-D=" + num(r));
        out.r = r;
        out.p = r - lam;
        out.q = (k + lam) / r;
        out.s = r / lam;
        break;
    }
    case Family::case_b: {
        if (k % 2 != 0) return fail("requires K even, got K=" + num(k));
        const int half = k / 2;
        const int r = d - half;
        if (r < 1) return fail("requires D > K/2, got D=" + num(d));
        if (!divides(r, half, "(D-K/2) | (K/2)", err)) return ev;
        out.r = r;
        out.n = half / r;
        break;
    }
    case Family::class_i: {
        if (k % 2 != 0) return fail("requires K even, got K=" + num(k));
        const int r = k / 2 - d;
        if (r < 1) return fail("requires D < K/2, got D=" + num(d));
        if (!divides(r, d, "(K/2-D) | D", err)) return ev;
        out.r = r;
        out.p = d / r;
        out.n = k / r;
        break;
    }
    case Family::class_ii: {
        if (!divides(lam, d, "lambda | D", err)) return ev;
        if (!divides(d, k - lam, "D | (K-lambda)", err)) return ev;
        const int n = (k - lam) / d;
        if (n < 2) return fail("requires (K-lambda)/D > 1, got " + num(n));
        out.n = n;
        out.s = d / lam;
        break;
    }
    case Family::class_iii:
        if (!divides(lam, d, "lambda | D", err)) return ev;
        if (!divides(d + lam, k, "(D+lambda) | K", err)) return ev;
        out.p = d / lam;
        out.n = k / (d + lam);
        break;
    case Family::class_iv: {
        if (!divides(lam, d, "lambda | D", err)) return ev;
        if (!divides(d, k + lam, "D | (K+lambda)", err)) return ev;
        const int n = (k + lam) / d;
        if (n < 3) return fail("requires (K+lambda)/D > 2, got " + num(n));
        out.n = n;
        out.p = d - lam;
        break;
    }
    }
    return ev;
}

} // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::case1: return "case1";
    case Family::case2: return "case2";
    case Family::case6: return "case6";
    case Family::case8: return "case8";
    case Family::case10: return "case10";
    case Family::case_b: return "case-b";
    case Family::class_i: return "class-i";
    case Family::class_ii: return "class-ii";
    case Family::class_iii: return "class-iii";
    case Family::class_iv: return "class-iv";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

bool family_uses_lambda(Family f) noexcept {
    return f != Family::case1 && f != Family::case2 && f != Family::case_b && f != Family::class_i;
}

bool family_has_code(Family f) noexcept { return f != Family::case8; }

std::optional<std::string> ClassDescriptor::violation(Family family, int k, int d, std::optional<int> lambda, int m) {
    auto ev = evaluate(family, k, d, lambda, m);
    if (ev.error) return std::string(family_name(family)) + ": " + *ev.error;
    return std::nullopt;
}

ClassDescriptor ClassDescriptor::make(Family family, int k, int d, std::optional<int> lambda, int m) {
    auto ev = evaluate(family, k, d, lambda, m);
    if (ev.error) throw std::invalid_argument(std::string(family_name(family)) + ": " + *ev.error);
    ClassDescriptor desc;
    desc.family_ = family;
    desc.k_ = k;
    desc.d_ = d;
    desc.lambda_ = lambda;
    desc.m_ = m;
    desc.derived_ = ev.derived;
    return desc;
}

std::string ClassDescriptor::to_string() const {
    std::string s(family_name(family_));
    s += "(K=" + num(k_) + ", D=" + num(d_);
    if (lambda_) s += ", lambda=" + num(*lambda_);
    s += ", m=" + num(m_) + ")";
    return s;
}

} // namespace icl
