#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace icl {

/// Problem families with a known antidote pattern. All but case8 also have an
/// explicit optimal code.
enum class Family { case1, case2, case6, case8, case10, case_b, class_i, class_ii, class_iii, class_iv };

inline constexpr std::array kAllFamilies = {
    Family::case1,  Family::case2,   Family::case6,    Family::case8,     Family::case10,
    Family::case_b, Family::class_i, Family::class_ii, Family::class_iii, Family::class_iv,
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
bool family_uses_lambda(Family f) noexcept;
bool family_has_code(Family f) noexcept;

/// Per-family derived quantities; only the ones a family defines are set.
///   case1:     n = K/D
///   case2:     r = K-D, n = K/r
///   case6:     r = K-D, q = (K-lambda)/r
///   case8:     r = K-D, p = K/(r+lambda)
///   case10:    r = K-D, p = r-lambda, q = (K+lambda)/r, s = r/lambda
///   case-b:    r = D-K/2, n = (K/2)/r
///   class-i:   r = K/2-D, p = D/r, n = K/r
///   class-ii:  n = (K-lambda)/D, s = D/lambda
///   class-iii: p = D/lambda, n = K/(D+lambda)
///   class-iv:  n = (K+lambda)/D, p = D-lambda
struct DerivedParams {
    std::optional<int> r, q, p, n, s;
    friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

/// A validated family instance: base parameters (K, D, lambda) plus a lift
/// multiplicity m. The problem it denotes has m*K receivers.
class ClassDescriptor {
public:
    /// Throws std::invalid_argument naming the failed constraint.
    static ClassDescriptor make(Family family, int k, int d, std::optional<int> lambda = std::nullopt, int m = 1);
    /// Returns the violated constraint, or nullopt if the parameters are valid.
    static std::optional<std::string> violation(Family family, int k, int d, std::optional<int> lambda, int m = 1);

    Family family() const noexcept { return family_; }
    int k() const noexcept { return k_; }
    int d() const noexcept { return d_; }
    std::optional<int> lambda() const noexcept { return lambda_; }
    int m() const noexcept { return m_; }
    const DerivedParams& derived() const noexcept { return derived_; }

    int lifted_k() const noexcept { return m_ * k_; }
    int lifted_d() const noexcept { return (m_ - 1) * k_ + d_; }

    ClassDescriptor with_m(int m) const { return make(family_, k_, d_, lambda_, m); }

    /// e.g. "case10(K=28, D=18, lambda=2, m=1)"
    std::string to_string() const;

    friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;

private:
    ClassDescriptor() = default;

    Family family_ = Family::case1;
    int k_ = 0;
    int d_ = 0;
    std::optional<int> lambda_;
    int m_ = 1;
    DerivedParams derived_;
};

} // namespace icl
