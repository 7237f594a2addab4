#include "icl/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "icl/analysis.hpp"
#include "icl/construct.hpp"
#include "icl/fixtures.hpp"
#include "icl/lifting.hpp"
#include "icl/serialize.hpp"

namespace icl::cli {

using json = Json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream outfile(path);
    if (!outfile) throw std::invalid_argument("cannot write " + path);
    outfile << text << '\n';
}

std::string format_offsets(const OffsetSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Groups runs of consecutive receivers that share an offset set.
void print_problem(std::ostream& out, const IndexCodingProblem& p) {
    out << "problem: K=" << p.k();
    if (p.is_uniform()) {
        out << ", every receiver k knows x_{k+a} for a in " << format_offsets(p.offsets(1)) << '\n';
        return;
    }
    out << '\n';
    int start = 1;
    for (int r = 2; r <= p.k() + 1; ++r) {
        if (r <= p.k() && p.offsets(r) == p.offsets(start)) continue;
        out << "  receivers " << start << '-' << (r - 1) << ": " << format_offsets(p.offsets(start)) << '\n';
        start = r;
    }
}

void print_code(std::ostream& out, const LinearIndexCode& c, const OptimalityCertificate& cert) {
    out << "code: " << c.length() << " symbols (lower bound " << cert.bound << ", "
        << optimality_name(cert.status) << ")\n";
    for (std::size_t j = 0; j < c.length(); ++j) out << "  " << (j + 1) << ": " << format_symbol(c.symbols()[j]) << '\n';
}

json certificate_json(const OptimalityCertificate& cert) {
    return json{{"status", std::string(optimality_name(cert.status))}, {"bound", cert.bound}, {"achieved", cert.achieved}};
}

// Human or JSON rendering of a (problem, code) pair, plus optional file output.
void emit_pair(std::ostream& out, bool as_json, const IndexCodingProblem& p, const LinearIndexCode& c,
               const std::string& problem_path, const std::string& code_path, json extra = json::object()) {
    const auto cert = optimality_certificate(p, c);
    if (!problem_path.empty()) write_file(problem_path, serialize_problem(p));
    if (!code_path.empty()) write_file(code_path, serialize_code(c));
    if (as_json) {
        extra["problem"] = problem_to_json(p);
        extra["code"] = code_to_json(c);
        extra["certificate"] = certificate_json(cert);
        out << extra.dump() << '\n';
        return;
    }
    print_problem(out, p);
    print_code(out, c, cert);
}

struct DescriptorArgs {
    std::string family;
    int k = 0;
    int d = 0;
    std::optional<int> lambda;

    ClassDescriptor make(int m = 1) const {
        auto f = parse_family(family);
        if (!f) throw std::invalid_argument("unknown family '" + family + "'");
        return ClassDescriptor::make(*f, k, d, lambda, m);
    }
};

void add_descriptor_options(CLI::App* sub, DescriptorArgs& a) {
    sub->add_option("--family", a.family, "case1|case2|case6|case8|case10|case-b|class-i|class-ii|class-iii|class-iv")
        ->required();
    sub->add_option("--k", a.k, "number of messages (K)")->required();
    sub->add_option("--d", a.d, "largest antidote offset (D)")->required();
    sub->add_option("--lambda", a.lambda, "family parameter lambda");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, lift, verify and certify scalar linear index codes over GF(2)", "icl"};
    app.require_subcommand(1, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    CLI::App* cap = app.add_subcommand("capacity", "per-message capacity with U up / D down consecutive antidotes");
    CapacityQuery cq;
    cap->add_option("--k", cq.k)->required();
    cap->add_option("--u", cq.u)->required();
    cap->add_option("--d", cq.d)->required();

    CLI::App* cons = app.add_subcommand("construct", "build a family instance and its code");
    DescriptorArgs cons_args;
    std::string out_path, code_out_path;
    add_descriptor_options(cons, cons_args);
    cons->add_option("--out", out_path, "write the problem JSON here");
    cons->add_option("--code-out", code_out_path, "write the code JSON here");

    CLI::App* lift = app.add_subcommand("lift", "lift a problem and code by multiplicity m");
    int lift_m = 1;
    std::string problem_path, code_path;
    lift->add_option("--m", lift_m)->required();
    lift->add_option("--problem", problem_path)->required();
    lift->add_option("--code", code_path)->required();
    lift->add_option("--out", out_path, "write the lifted problem JSON here");
    lift->add_option("--code-out", code_out_path, "write the lifted code JSON here");

    CLI::App* ver = app.add_subcommand("verify", "check that every receiver can decode");
    ver->add_option("--problem", problem_path)->required();
    ver->add_option("--code", code_path)->required();

    CLI::App* mr = app.add_subcommand("minrank", "exhaustive minrank of the side-information graph");
    int max_free_bits = kDefaultMinrankBudget;
    mr->add_option("--problem", problem_path)->required();
    mr->add_option("--max-free-bits", max_free_bits, "enumeration budget (free fitting-matrix entries)");

    CLI::App* cls = app.add_subcommand("classify", "list family descriptors matching a problem");
    cls->add_option("--problem", problem_path)->required();

    CLI::App* clo = app.add_subcommand("closure", "family of the lifted problem for lift-closed families");
    DescriptorArgs clo_args;
    int closure_m = 2;
    add_descriptor_options(clo, clo_args);
    clo->add_option("--m", closure_m)->required();

    CLI::App* dem = app.add_subcommand("demo", "reproduce a worked example and compare with its fixture");
    int example = 0;
    std::optional<int> demo_m;
    dem->add_option("--example", example, "1..7")->required();
    dem->add_option("--m", demo_m, "lift multiplicity (default: every fixture of the example)");

    CLI::App* dot = app.add_subcommand("export-dot", "side-information digraph in DOT");
    dot->add_option("--problem", problem_path)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (cap->parsed()) {
            const auto c = capacity(cq);
            if (as_json) {
                out << json{{"k", cq.k}, {"u", cq.u}, {"d", cq.d}, {"capacity", c.to_string()},
                            {"numerator", c.numerator}, {"denominator", c.denominator}}
                           .dump()
                    << '\n';
            } else {
                out << c.to_string() << '\n';
            }
            return kExitOk;
        }

        if (cons->parsed()) {
            const auto desc = cons_args.make();
            const auto built = construct(desc);
            if (!as_json) out << desc.to_string() << '\n';
            emit_pair(out, as_json, built.problem, built.code, out_path, code_out_path,
                      json{{"descriptor", descriptor_to_json(desc)}});
            return kExitOk;
        }

        if (lift->parsed()) {
            const auto p = parse_problem(read_file(problem_path));
            const auto c = parse_code(read_file(code_path));
            const auto lp = lift_problem(p, lift_m);
            const auto lc = lift_code(p, c, lift_m);
            if (!as_json) out << "lifted with m=" << lift_m << '\n';
            emit_pair(out, as_json, lp, lc, out_path, code_out_path, json{{"m", lift_m}});
            return kExitOk;
        }

        if (ver->parsed()) {
            const auto p = parse_problem(read_file(problem_path));
            const auto c = parse_code(read_file(code_path));
            const auto report = verify(p, c);
            if (as_json) {
                out << json{{"decodable", report.decodable}, {"overall", report.overall},
                            {"failing", report.failing_receivers()}}
                           .dump()
                    << '\n';
            } else if (report.overall) {
                out << "all " << p.k() << " receivers decodable\n";
            } else {
                for (int r : report.failing_receivers()) out << "receiver " << r << ": NOT decodable\n";
                out << report.failing_receivers().size() << " of " << p.k() << " receivers cannot decode\n";
            }
            return report.overall ? kExitOk : kExitValidation;
        }

        if (mr->parsed()) {
            const auto p = parse_problem(read_file(problem_path));
            const auto res = minrank(p, max_free_bits, 0);
            if (as_json) {
                json j{{"status", std::string(minrank_status_name(res.status))},
                       {"free_bits", res.free_bits},
                       {"evaluated", res.evaluated},
                       {"evaluated_approximate", res.evaluated_approximate},
                       {"lower_bound", length_lower_bound(p)}};
                j["value"] = res.status == MinrankStatus::exact ? json(res.value) : json(nullptr);
                out << j.dump() << '\n';
            } else if (res.status == MinrankStatus::exact) {
                out << "minrank = " << res.value << " (" << res.free_bits << " free bits, "
                    << (res.evaluated_approximate ? "~" : "") << res.evaluated << " fitting matrices evaluated"
                    << (res.early_exit ? ", stopped at the lower bound" : "") << ")\n";
            } else {
                out << "budget exceeded: " << res.free_bits << " free bits > " << max_free_bits << '\n';
            }
            return kExitOk;
        }

        if (cls->parsed()) {
            const auto p = parse_problem(read_file(problem_path));
            const auto found = classify(p);
            if (as_json) {
                json arr = json::array();
                for (const auto& d : found) arr.push_back(descriptor_to_json(d));
                out << arr.dump() << '\n';
            } else if (found.empty()) {
                out << "no matching family\n";
            } else {
                for (const auto& d : found) out << d.to_string() << '\n';
            }
            return kExitOk;
        }

        if (clo->parsed()) {
            const auto res = check_closure(clo_args.make(), closure_m);
            if (as_json) {
                out << json{{"input", descriptor_to_json(res.input)}, {"m", res.m},
                            {"output", descriptor_to_json(res.output)}}
                           .dump()
                    << '\n';
            } else {
                out << res.input.to_string() << " lifted with m=" << res.m << " -> " << res.output.to_string() << '\n';
            }
            return kExitOk;
        }

        if (dem->parsed()) {
            std::vector<int> ms = demo_m ? std::vector<int>{*demo_m} : supported_multiplicities(example);
            if (ms.empty()) throw std::invalid_argument("example must be in [1, 7], got " + std::to_string(example));
            bool all_pass = true;
            json arr = json::array();
            for (int m : ms) {
                const auto rep = demo(example, m);
                all_pass = all_pass && rep.passed();
                if (as_json) {
                    json missing = rep.missing, unexpected = rep.unexpected;
                    arr.push_back(json{{"example", rep.example}, {"m", rep.m}, {"passed", rep.passed()},
                                       {"problem_match", rep.problem_match}, {"code_match", rep.code_match},
                                       {"decodable", rep.decodable}, {"certificate", certificate_json(rep.certificate)},
                                       {"length", rep.actual_length}, {"missing", missing},
                                       {"unexpected", unexpected}});
                    continue;
                }
                out << "example " << rep.example << ", m=" << rep.m << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
                    << rep.actual_length << " symbols, expected " << rep.expected_length << "; problem "
                    << (rep.problem_match ? "matches" : "differs") << "; "
                    << (rep.decodable ? "all receivers decode" : "decoding fails") << "; "
                    << optimality_name(rep.certificate.status) << ")\n";
                for (const auto& s : rep.missing) out << "  - missing    " << format_symbol(s) << '\n';
                for (const auto& s : rep.unexpected) out << "  + unexpected " << format_symbol(s) << '\n';
            }
            if (as_json) out << arr.dump() << '\n';
            return all_pass ? kExitOk : kExitValidation;
        }

        if (dot->parsed()) {
            out << export_dot(parse_problem(read_file(problem_path)));
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}

} // namespace icl::cli
