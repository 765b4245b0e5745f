// weylcheb: orbits, orbit-function values, product decompositions,
// Chebyshev polynomials and verification suites of A_n from the command line.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or
// precondition error. Output is assembled completely before anything is
// written, so error paths print nothing to stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weylcheb/chebyshev.hpp"
#include "weylcheb/exp_ring.hpp"
#include "weylcheb/io.hpp"
#include "weylcheb/orbit_functions.hpp"
#include "weylcheb/verify.hpp"
#include "weylcheb/weyl.hpp"

using namespace weylcheb;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::int64_t> parse_ints(const std::string& s, const char* what) {
    std::vector<std::int64_t> out;
    for (const auto& p : split_commas(s)) {
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
        if (p.empty() || ec != std::errc() || end != p.data() + p.size()) {
            throw PreconditionError(std::string("invalid ") + what + " '" + s + "': expected comma-separated integers");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    for (const auto& p : split_commas(s)) {
        std::istringstream is(p);
        is.imbue(std::locale::classic());
        double v = 0.0;
        if (p.empty() || !(is >> v) || !is.eof()) {
            throw PreconditionError("invalid point '" + s + "': expected comma-separated reals");
        }
        out.push_back(v);
    }
    return out;
}

Weight parse_weight(const std::string& s, std::optional<int> rank, const char* what) {
    auto coords = parse_ints(s, what);
    const int n = rank.value_or(static_cast<int>(coords.size()));
    if (static_cast<int>(coords.size()) != n) {
        throw PreconditionError(std::string(what) + " has " + std::to_string(coords.size()) +
                                " coordinates but the rank is " + std::to_string(n));
    }
    return Weight(Rank(n), std::move(coords));
}

OrbitKind parse_kind(const std::string& s) {
    if (s == "C") return OrbitKind::C;
    if (s == "S") return OrbitKind::S;
    if (s == "E") return OrbitKind::E;
    throw PreconditionError("unknown kind '" + s + "' (expected C, S or E)");
}

std::string fmt15(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string algebra(Rank r) { return "A" + std::to_string(r.value()); }

struct Args {
    std::optional<int> rank;
    std::string lambda;
    std::string a;
    std::string b;
    std::string kind;
    std::string point;
    std::string suite = "all";
    int coord_bound = 3;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    bool csv = false;
    std::string out;
};

struct Output {
    std::string text;
    int status = kExitOk;
    std::string file_payload;  // written to --out when set
};

Output cmd_orbit(const Args& a) {
    const Weight lambda = parse_weight(a.lambda, a.rank, "weight");
    const SignedOrbit o = orbit(lambda);
    Output out;
    if (a.json) {
        json pts = json::array();
        for (const auto& p : o.points) pts.push_back({{"weight", p.weight.coords}, {"sign", p.sign}});
        json j = {{"algebra", algebra(lambda.rank)},
                  {"lambda", lambda.coords},
                  {"size", o.size()},
                  {"stabilizer_order", stabilizer_order(lambda)},
                  {"points", pts}};
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "orbit of " << lambda.to_string() << " in " << algebra(lambda.rank) << ": " << o.size()
           << " points, stabilizer order " << stabilizer_order(lambda) << '\n';
        for (const auto& p : o.points) os << p.weight.to_string() << ' ' << (p.sign > 0 ? '+' : '-') << '\n';
        out.text = os.str();
    }
    return out;
}

Output cmd_eval(const Args& a) {
    const Weight lambda = parse_weight(a.lambda, a.rank, "weight");
    const OrbitKind kind = parse_kind(a.kind);
    auto x = parse_reals(a.point);
    if (static_cast<int>(x.size()) != lambda.rank.value()) {
        throw PreconditionError("point needs " + std::to_string(lambda.rank.value()) + " alpha-coordinates");
    }
    const AlphaPoint p(lambda.rank, x);
    bool wall = false;
    Complex v;
    switch (kind) {
        case OrbitKind::C: v = eval_C(lambda, p); break;
        case OrbitKind::S: {
            const SValue s = eval_S(lambda, p);
            v = s.value;
            wall = s.on_wall;
            break;
        }
        case OrbitKind::E: v = eval_E(lambda, p); break;
    }
    Output out;
    if (a.json) {
        json j = {{"algebra", algebra(lambda.rank)},
                  {"kind", to_string(kind)},
                  {"lambda", lambda.coords},
                  {"x", x},
                  {"re", json::parse(fmt15(v.real()))},
                  {"im", json::parse(fmt15(v.imag()))}};
        if (kind == OrbitKind::S) j["on_wall"] = wall;
        out.text = j.dump(2) + "\n";
    } else {
        out.text = fmt15(v.real()) + " " + fmt15(v.imag()) + "\n";
    }
    return out;
}

Output cmd_decompose(const Args& a) {
    const Weight wa = parse_weight(a.a, a.rank, "weight -a");
    const Weight wb = parse_weight(a.b, a.rank, "weight -b");
    if (!(wa.rank == wb.rank)) throw PreconditionError("weights -a and -b have different ranks");
    if (!wa.is_dominant() || !wb.is_dominant()) throw PreconditionError("both weights must be dominant");
    const auto d = decompose_into_C(multiply(exp_sum(wa, OrbitKind::C), exp_sum(wb, OrbitKind::C)));
    const int n1 = wa.rank.dim();
    const int cls = (congruence_number(wa) + congruence_number(wb)) % n1;
    Output out;
    if (a.json) {
        json j = to_json(d);
        for (auto& t : j["terms"]) {
            t["congruence"] = congruence_number(Weight(wa.rank, t["weight"].get<std::vector<std::int64_t>>()));
        }
        j["congruence"] = cls;
        out.text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "C" << wa.to_string() << " * C" << wb.to_string() << " in " << algebra(wa.rank)
           << ", congruence class " << cls << '\n';
        for (auto it = d.terms.rbegin(); it != d.terms.rend(); ++it) {
            os << it->second << " * C" << Weight(wa.rank, it->first).to_string() << '\n';
        }
        out.text = os.str();
    }
    return out;
}

Output cmd_poly(const Args& a) {
    const Weight lambda = parse_weight(a.lambda, a.rank, "weight");
    const PolyKind kind = poly_kind_from_string(a.kind);
    if (a.json && a.csv) throw PreconditionError("--json and --csv are mutually exclusive");
    Output out;
    auto render = [&](const auto& p) {
        if (a.json) {
            out.text = to_json(p, lambda, kind).dump(2) + "\n";
        } else if (a.csv) {
            out.text = to_csv(p);
        } else {
            out.text = p.to_string() + "\n";
        }
    };
    switch (kind) {
        case PolyKind::T: render(poly_T(lambda)); break;
        case PolyKind::U: render(poly_U(lambda)); break;
        case PolyKind::PC: render(substitute_P(lambda, OrbitKind::C)); break;
        case PolyKind::PS: render(substitute_P(lambda, OrbitKind::S)); break;
        case PolyKind::PE: render(substitute_P(lambda, OrbitKind::E)); break;
    }
    return out;
}

Output cmd_verify(const Args& a) {
    VerifyOptions o;
    o.rank = a.rank;
    o.coord_bound = a.coord_bound;
    o.seed = a.seed;
    const SuiteResult r = run_suite(a.suite, o);
    Output out;
    const std::string report = to_json(r).dump(2) + "\n";
    out.text = a.json ? report : to_text(r);
    out.file_payload = report;
    out.status = r.passed() ? kExitOk : kExitFailed;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl orbit functions and multivariate Chebyshev polynomials of A_n"};
    app.require_subcommand(1);
    Args args;

    auto add_rank = [&](CLI::App* c) { c->add_option("-n,--rank", args.rank, "Rank n of A_n (default: weight length)"); };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", args.json, "Machine-readable JSON output"); };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", args.out, "Also write the output to this file"); };

    auto* orbit_cmd = app.add_subcommand("orbit", "List a Weyl orbit with signs");
    add_rank(orbit_cmd);
    orbit_cmd->add_option("-l,--lambda", args.lambda, "Dominant weight, e.g. 1,0")->required();
    add_json(orbit_cmd);
    add_out(orbit_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate C, S or E at a point (alpha coordinates)");
    add_rank(eval_cmd);
    eval_cmd->add_option("-k,--kind", args.kind, "C, S or E")->required();
    eval_cmd->add_option("-l,--lambda", args.lambda, "Weight")->required();
    eval_cmd->add_option("-x,--point", args.point, "Point, e.g. 0.1,0.2")->required();
    add_json(eval_cmd);
    add_out(eval_cmd);

    auto* dec_cmd = app.add_subcommand("decompose", "Decompose C_a * C_b into C orbit functions");
    add_rank(dec_cmd);
    dec_cmd->add_option("-a", args.a, "First dominant weight")->required();
    dec_cmd->add_option("-b", args.b, "Second dominant weight")->required();
    add_json(dec_cmd);
    add_out(dec_cmd);

    auto* poly_cmd = app.add_subcommand("poly", "Chebyshev (T, U) or substitution (PC, PS, PE) polynomial");
    add_rank(poly_cmd);
    poly_cmd->add_option("-l,--lambda", args.lambda, "Weight")->required();
    poly_cmd->add_option("-k,--kind", args.kind, "T, U, PC, PS or PE")->required();
    add_json(poly_cmd);
    poly_cmd->add_flag("--csv", args.csv, "One term per row as CSV");
    add_out(poly_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    add_rank(verify_cmd);
    verify_cmd->add_option("-s,--suite", args.suite, "all, ortho, laplace, symmetry, chebyshev or detforms");
    verify_cmd->add_option("-c,--coord-bound", args.coord_bound, "Largest weight coordinate");
    verify_cmd->add_option("--seed", args.seed, "Random seed");
    add_json(verify_cmd);
    verify_cmd->add_option("--out", args.out, "Write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    try {
        if (*orbit_cmd) out = cmd_orbit(args);
        else if (*eval_cmd) out = cmd_eval(args);
        else if (*dec_cmd) out = cmd_decompose(args);
        else if (*poly_cmd) out = cmd_poly(args);
        else out = cmd_verify(args);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!args.out.empty()) {
        std::ofstream f(args.out, std::ios::binary);
        f << (out.file_payload.empty() ? out.text : out.file_payload);
        if (!f) {
            std::cerr << "error: cannot write " << args.out << '\n';
            return kExitUsage;
        }
    }
    std::cout << out.text;
    return out.status;
}
