#include "weylcheb/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "weylcheb/chebyshev.hpp"
#include "weylcheb/exp_ring.hpp"
#include "weylcheb/io.hpp"
#include "weylcheb/weyl.hpp"

namespace weylcheb {

using nlohmann::json;

namespace {

struct SuiteLimits {
    const char* name;
    int default_min_rank;
    int default_max_rank;
    int max_rank;
    int max_coord;
};

constexpr SuiteLimits kSuites[] = {
    {"ortho", 1, 3, 4, 4},
    {"laplace", 1, 3, 6, 4},
    {"symmetry", 1, 3, 5, 4},
    {"chebyshev", 1, 3, 4, 4},
    {"detforms", 1, 4, 7, 8},
};

const SuiteLimits& limits_for(const std::string& name) {
    for (const auto& s : kSuites) {
        if (name == s.name) return s;
    }
    throw PreconditionError("unknown suite '" + name + "' (expected all, ortho, laplace, symmetry, chebyshev or detforms)");
}

std::pair<int, int> rank_range(const SuiteLimits& s, const VerifyOptions& o) {
    if (o.rank) {
        if (*o.rank < 1 || *o.rank > s.max_rank) {
            throw PreconditionError(std::string("suite ") + s.name + " supports ranks 1.." + std::to_string(s.max_rank));
        }
        return {*o.rank, *o.rank};
    }
    return {s.default_min_rank, s.default_max_rank};
}

void check_coord_bound(const SuiteLimits& s, const VerifyOptions& o) {
    if (o.coord_bound < 1 || o.coord_bound > s.max_coord) {
        throw PreconditionError(std::string("suite ") + s.name + " supports coordinate bounds 1.." +
                                std::to_string(s.max_coord));
    }
}

std::vector<Weight> box_weights(Rank n, std::int64_t lo, std::int64_t hi) {
    std::vector<Weight> out;
    std::vector<std::int64_t> c(n.value(), lo);
    while (true) {
        out.emplace_back(n, c);
        int i = n.value() - 1;
        while (i >= 0 && c[i] == hi) c[i--] = lo;
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

std::string rank_tag(int n) { return "A" + std::to_string(n); }

void add(SuiteResult& r, std::string name, bool passed, json detail = json::object()) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
}

// ---------------------------------------------------------------------------

void run_ortho(SuiteResult& out, const VerifyOptions& o) {
    const auto& s = limits_for("ortho");
    check_coord_bound(s, o);
    const auto [lo, hi] = rank_range(s, o);
    for (int n = lo; n <= hi; ++n) {
        for (OrbitKind kind : {OrbitKind::C, OrbitKind::S, OrbitKind::E}) {
            const auto rep = orthogonality_suite(kind, Rank(n), o.coord_bound, o.quadrature_points);
            add(out, std::string("ortho.") + to_string(kind) + "." + rank_tag(n), rep.passed, to_json(rep));
        }
    }
}

void run_laplace(SuiteResult& out, const VerifyOptions& o) {
    const auto& s = limits_for("laplace");
    check_coord_bound(s, o);
    const auto [lo, hi] = rank_range(s, o);
    constexpr int kPoints = 20;
    constexpr double kH = 1e-3;
    constexpr double kTolerance = 1e-4;
    const std::int64_t top = std::min(o.coord_bound, 2);

    std::mt19937_64 rng(o.seed);
    for (int n = lo; n <= hi; ++n) {
        const Rank r(n);
        const Weight strict = random_weight(r, 1, top, rng);
        const std::vector<std::pair<OrbitKind, Weight>> cases = {
            {OrbitKind::C, random_weight(r, 0, top, rng)},
            {OrbitKind::S, strict},
            {OrbitKind::E, strict},
            {OrbitKind::E, reflect(1, strict)},
        };
        for (const auto& [kind, lambda] : cases) {
            double max_err = 0.0, sum_h = 0.0, sum_half = 0.0;
            int inconclusive = 0;
            for (int p = 0; p < kPoints; ++p) {
                const auto x = random_alpha_point(r, rng).to_e();
                const std::uint64_t retry_seed = rng();
                const auto a = laplacian_eigenvalue_check(kind, lambda, x, kH, retry_seed);
                if (a.inconclusive) {
                    ++inconclusive;
                    continue;
                }
                const auto b = laplacian_eigenvalue_check(kind, lambda, a.point, kH / 2, retry_seed);
                max_err = std::max(max_err, a.relative_error);
                sum_h += a.relative_error;
                sum_half += b.relative_error;
            }
            const bool trivial = sum_h == 0.0 || inner_product(lambda, lambda) == 0;
            const double ratio = trivial ? 0.0 : sum_h / sum_half;
            const bool ok = inconclusive < kPoints && max_err < kTolerance && (trivial || (ratio >= 3.0 && ratio <= 5.0));
            add(out, std::string("laplace.") + to_string(kind) + lambda.to_string() + "." + rank_tag(n), ok,
                {{"lambda", lambda.coords},
                 {"points", kPoints},
                 {"h", kH},
                 {"max_relative_error", max_err},
                 {"halving_ratio", ratio},
                 {"inconclusive", inconclusive}});
        }
    }
}

void run_symmetry(SuiteResult& out, const VerifyOptions& o) {
    const auto& s = limits_for("symmetry");
    check_coord_bound(s, o);
    const auto [lo, hi] = rank_range(s, o);
    constexpr int kTrials = 100;
    for (int n = lo; n <= hi; ++n) {
        double worst = 0.0;
        bool ok = true;
        std::size_t labels = 0;
        json failures = json::array();
        for (const auto& lambda : box_weights(Rank(n), 0, o.coord_bound)) {
            const auto rep = symmetry_suite(lambda, kTrials, o.seed);
            ++labels;
            worst = std::max({worst, rep.max_c_deviation / rep.scale, rep.max_s_deviation / rep.scale,
                              rep.max_e_deviation / rep.scale, rep.max_conjugation_deviation / rep.scale});
            if (!rep.passed) {
                ok = false;
                failures.push_back(to_json(rep));
            }
        }
        add(out, "symmetry." + rank_tag(n), ok,
            {{"labels", labels}, {"trials", kTrials}, {"max_relative_deviation", worst}, {"failures", failures}});
    }
}

XPolynomial x_poly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
    XPolynomial p(Rank(1));
    for (const auto& [deg, c] : terms) p.add_term({deg}, c);
    return p;
}

void run_chebyshev(SuiteResult& out, const VerifyOptions& o) {
    const auto& s = limits_for("chebyshev");
    check_coord_bound(s, o);
    const auto [lo, hi] = rank_range(s, o);

    if (lo == 1) {
        bool t_ok = true, u_ok = true;
        for (int m = 0; m <= 20; ++m) {
            const Weight w(Rank(1), {m});
            const ClassicalPoly expect_t = m == 0 ? classical_T(0) : classical_T(m) * BigInt(2);
            t_ok = t_ok && poly_T(w).to_classical() == expect_t;
            u_ok = u_ok && poly_U(w).to_classical() == classical_U(m);
        }
        add(out, "chebyshev.A1.T_equals_2T", t_ok, {{"m_max", 20}});
        add(out, "chebyshev.A1.U_equals_U", u_ok, {{"m_max", 20}});

        const std::vector<std::pair<int, XPolynomial>> listed_c = {
            {2, x_poly({{2, 1}, {0, -2}})}, {3, x_poly({{3, 1}, {1, -3}})}, {4, x_poly({{4, 1}, {2, -4}, {0, 2}})}};
        const std::vector<std::pair<int, XPolynomial>> listed_u = {
            {2, x_poly({{2, 1}, {0, -1}})}, {3, x_poly({{3, 1}, {1, -2}})}, {4, x_poly({{4, 1}, {2, -3}, {0, 1}})}};
        bool listed_ok = true;
        json shown = json::object();
        for (const auto& [m, p] : listed_c) {
            const auto got = poly_T(Weight(Rank(1), {m}));
            listed_ok = listed_ok && got == p;
            shown["C_" + std::to_string(m)] = got.to_string();
        }
        for (const auto& [m, p] : listed_u) {
            const auto got = poly_U(Weight(Rank(1), {m}));
            listed_ok = listed_ok && got == p;
            shown["chi_" + std::to_string(m)] = got.to_string();
        }
        add(out, "chebyshev.A1.listed_polynomials", listed_ok, shown);

        bool ident_ok = true;
        for (int m = 0; m <= 20; ++m) ident_ok = ident_ok && classical_identities_check(m).all_hold();
        add(out, "chebyshev.classical_identities", ident_ok, {{"m_max", 20}});
    }

    std::mt19937_64 rng(o.seed);
    for (int n = lo; n <= hi; ++n) {
        const Rank r(n);
        ChebyshevBuilder smallest(r, IndexChoice::Smallest);
        ChebyshevBuilder largest(r, IndexChoice::Largest);
        bool strategies = true, congruence = true, evaluation = true;
        double max_eval_dev = 0.0;
        const int bound = std::min(o.coord_bound, n >= 3 ? 2 : o.coord_bound);
        for (const auto& lambda : box_weights(r, 0, bound)) {
            const XPolynomial& t = smallest.poly_T(lambda);
            strategies = strategies && t == largest.poly_T(lambda);
            const XPolynomial u = smallest.poly_U(lambda);
            const int cls = congruence_number(lambda);
            for (const XPolynomial* p : {&t, &u}) {
                for (const auto& [deg, c] : p->terms()) {
                    std::int64_t sum = 0;
                    for (int k = 0; k < n; ++k) sum += (k + 1) * deg[k];
                    congruence = congruence && ((sum - cls) % (n + 1) + (n + 1)) % (n + 1) == 0;
                }
            }
            const AlphaPoint x = random_alpha_point(r, rng);
            std::vector<Complex> xs;
            for (int j = 1; j <= n; ++j) xs.push_back(eval_C(Weight::fundamental(r, j), x));
            const double dev = std::abs(t.evaluate(xs) - eval_C(lambda, x)) / static_cast<double>(orbit_size(lambda));
            max_eval_dev = std::max(max_eval_dev, dev);
            evaluation = evaluation && dev < 1e-9;
        }
        add(out, "chebyshev.strategies_agree." + rank_tag(n), strategies, {{"coord_bound", bound}});
        add(out, "chebyshev.congruence_rule." + rank_tag(n), congruence, {{"coord_bound", bound}});
        add(out, "chebyshev.T_reproduces_C." + rank_tag(n), evaluation,
            {{"coord_bound", bound}, {"max_relative_deviation", max_eval_dev}});

        constexpr int kPairs = 50;
        bool round_trip = true;
        for (int p = 0; p < kPairs; ++p) {
            const Weight a = random_weight(r, 0, o.coord_bound, rng);
            const Weight b = random_weight(r, 0, o.coord_bound, rng);
            const ExpSum prod = multiply(exp_sum(a, OrbitKind::C), exp_sum(b, OrbitKind::C));
            const auto d = decompose_into_C(prod);
            const int cls = (congruence_number(a) + congruence_number(b)) % (n + 1);
            bool ok = d.expand() == prod && d.total_points() == BigInt(orbit_size(a)) * orbit_size(b);
            for (const auto& [w, mult] : d.terms) {
                ok = ok && mult > 0 && congruence_number(Weight(r, w)) == cls;
            }
            round_trip = round_trip && ok;
        }
        add(out, "chebyshev.decomposition_round_trip." + rank_tag(n), round_trip, {{"pairs", kPairs}});

        for (int j = 1; j <= n; ++j) {
            const auto k = generic_threshold(r, j);
            bool ok = k.has_value();
            if (ok) {
                for (int kk = *k; kk <= *k + 2; ++kk) {
                    const auto rel = recursion_relation(j, Weight(r, std::vector<std::int64_t>(n, kk)));
                    ok = ok && rel.generic && rel.total_terms() == generic_term_count(r, j);
                }
            }
            add(out, "chebyshev.generic_recursion." + rank_tag(n) + ".j" + std::to_string(j), ok,
                {{"expected_terms", generic_term_count(r, j)}, {"threshold", k ? json(*k) : json(nullptr)}});
        }
    }
}

void run_detforms(SuiteResult& out, const VerifyOptions& o) {
    const auto& s = limits_for("detforms");
    check_coord_bound(s, o);
    const auto [lo, hi] = rank_range(s, o);
    for (int n = lo; n <= hi; ++n) {
        const auto rep = detforms_suite(Rank(n), 100, o.coord_bound, o.seed + static_cast<std::uint64_t>(n));
        add(out, "detforms." + rank_tag(n), rep.passed, to_json(rep));
    }
}

using Runner = std::function<void(SuiteResult&, const VerifyOptions&)>;

Runner runner_for(const std::string& name) {
    if (name == "ortho") return run_ortho;
    if (name == "laplace") return run_laplace;
    if (name == "symmetry") return run_symmetry;
    if (name == "chebyshev") return run_chebyshev;
    if (name == "detforms") return run_detforms;
    limits_for(name);  // throws
    return {};
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ortho", "laplace", "symmetry", "chebyshev", "detforms"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
    if (options.quadrature_points < 0) throw PreconditionError("quadrature points must be nonnegative");
    SuiteResult out;
    out.suite = name;
    out.seed = options.seed;
    if (name == "all") {
        // Validate everything before running anything.
        for (const auto& n : suite_names()) {
            const auto& s = limits_for(n);
            check_coord_bound(s, options);
            rank_range(s, options);
        }
        for (const auto& n : suite_names()) runner_for(n)(out, options);
    } else {
        runner_for(name)(out, options);
    }
    return out;
}

json to_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

std::string to_text(const SuiteResult& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " (seed " << r.seed << ")\n";
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
        if (!c.passed) ++failed;
    }
    os << r.checks.size() - failed << '/' << r.checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace weylcheb
