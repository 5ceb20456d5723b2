#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mdist/mdist.hpp>

namespace {

using nlohmann::ordered_json;
using namespace mdist;

// wrong or missing arguments (exit 2), as opposed to numeric failures (3)
// and budget guards (4)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// floats are printed with 17 significant digits (enough to round-trip a
// double) and always carry a decimal marker so they stay floats on re-parse
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

// like ordered_json::dump(), but floats go through fmt17
void dump17(const ordered_json& j, std::ostream& os) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            os << '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ',';
                first = false;
                os << ordered_json(key).dump() << ':';
                dump17(value, os);
            }
            os << '}';
            break;
        }
        case ordered_json::value_t::array: {
            os << '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) os << ',';
                first = false;
                dump17(value, os);
            }
            os << ']';
            break;
        }
        case ordered_json::value_t::number_float:
            os << fmt17(j.get<double>());
            break;
        default:
            os << j.dump();
            break;
    }
}

void emit(const ordered_json& j, std::ostream& os = std::cout) {
    dump17(j, os);
    os << '\n';
}

ordered_json rational_json(const BigRational& r) {
    return ordered_json{{"num", to_string(numerator(r))}, {"den", to_string(denominator(r))}};
}

ordered_json poly_coefficients(const IntPoly& p) {
    ordered_json cs = ordered_json::array();
    for (int k = std::max(p.degree(), 0); k >= 0; --k) cs.push_back(to_string(p.coeff(k)));
    return cs;
}

RootFunctionKind parse_kind(const std::string& name) {
    if (name == "mahler") return RootFunctionKind::mahler();
    if (name == "reciprocal") return RootFunctionKind::reciprocal();
    if (name.rfind("trec:", 0) == 0) {
        BigRational t;
        try {
            t = parse_rational(name.substr(5));
        } catch (const std::exception&) {
            throw UsageError("cannot parse the t parameter in '" + name + "'");
        }
        if (t < 0 || t > 1) throw UsageError("the trec parameter must lie in [0,1]");
        return RootFunctionKind::t_reciprocal(t);
    }
    throw UsageError("unknown kind '" + name + "' (expected mahler, reciprocal, or trec:<p/q>)");
}

Polynomial parse_poly(const std::string& csv) {
    std::vector<cdouble> c;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse coefficient '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("cannot parse coefficient '" + tok + "'");
        c.emplace_back(v, 0.0);
    }
    if (c.empty()) throw UsageError("--poly needs at least one coefficient");
    Polynomial f{std::move(c)};
    if (f.is_zero()) throw UsageError("the zero polynomial has no root decomposition");
    return f;
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MDIST_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

QuadratureSpec spec_for(double tol) {
    QuadratureSpec spec;
    if (tol > 0.0) {
        spec.rel_tol = tol;
        spec.abs_tol = std::min(spec.abs_tol, tol);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// eval: multiplicative distance of one polynomial
// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string kind = "mahler";
    std::string poly;
    double tol = 1e-13;
};

int cmd_eval(const EvalArgs& a) {
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
    RootFunctionKind kind = parse_kind(a.kind);
    Polynomial f = parse_poly(a.poly);
    RootSet rs = roots(f, a.tol);
    std::sort(rs.roots.begin(), rs.roots.end(), [](const cdouble& x, const cdouble& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    double d = std::abs(rs.leading);
    for (const auto& r : rs.roots) d *= root_value(kind, r);
    ordered_json roots_json = ordered_json::array();
    for (const auto& r : rs.roots) roots_json.push_back({r.real(), r.imag()});
    emit({{"schema", 1},
          {"command", "eval"},
          {"kind", a.kind},
          {"distance", d},
          {"leading_abs", std::abs(rs.leading)},
          {"roots", roots_json}});
    return 0;
}

// ---------------------------------------------------------------------------
// moment: H_N / F_N via the closed form, the Pf/Gram quadrature routes, or
// the direct root-space integration oracle
// ---------------------------------------------------------------------------

struct MomentArgs {
    std::string type = "H";
    std::string kind = "mahler";
    std::string route = "closed";
    std::string s; // rational or decimal; empty = no evaluation
    int N = 1;
    double tol = 0.0;
};

int cmd_moment(const MomentArgs& a) {
    if (a.type != "H" && a.type != "F") throw UsageError("--type must be H or F");
    RootFunctionKind kind = parse_kind(a.kind);
    bool is_H = a.type == "H";
    ordered_json out{{"schema", 1}, {"command", "moment"}, {"type", a.type},
                     {"kind", a.kind}, {"N", a.N},         {"route", a.route}};

    if (a.route == "closed") {
        MomentClosedForm m;
        try {
            m = is_H ? H_closed(kind, a.N) : F_closed(kind, a.N);
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const Error& e) {
            throw UsageError(e.what()); // no closed form for this type/kind pair
        }
        out["pi_power"] = m.scaled.pi_power;
        out["display"] = m.to_string();
        out["constant"] = rational_json(m.constant);
        auto factor_list = [](const std::vector<FactorPower>& fs) {
            ordered_json arr = ordered_json::array();
            for (const auto& f : fs)
                arr.push_back({{"coefficients", poly_coefficients(f.factor)},
                               {"multiplicity", f.multiplicity}});
            return arr;
        };
        out["numerator_factors"] = factor_list(m.numerator);
        out["denominator_factors"] = factor_list(m.denominator);
        out["canonical_numerator"] = poly_coefficients(m.scaled.body.num());
        out["canonical_denominator"] = poly_coefficients(m.scaled.body.den());
        out["limit_times_pi^-k"] = rational_json(moment_limit(m));
        if (!a.s.empty()) {
            BigRational s;
            try {
                s = parse_rational(a.s);
            } catch (const std::exception&) {
                throw UsageError("cannot parse --s as a rational");
            }
            out["s"] = rational_json(s);
            BigRational v = m.body_value(s); // throws at a pole (exit 3)
            out["value_times_pi^-k"] = rational_json(v);
            double value = to_double(v);
            for (int i = 0; i < m.scaled.pi_power; ++i) value *= std::numbers::pi;
            out["value"] = value;
        }
        emit(out);
        return 0;
    }

    if (a.route != "numeric" && a.route != "oracle")
        throw UsageError("--route must be closed, numeric, or oracle");
    if (a.s.empty()) throw UsageError("routes numeric and oracle need --s");
    double s = 0.0;
    try {
        s = to_double(parse_rational(a.s));
    } catch (const std::exception&) {
        throw UsageError("cannot parse --s as a rational");
    }
    if (!(s > a.N)) throw UsageError("numeric moments converge only for s > N");
    out["s"] = s;
    QuadratureSpec spec = spec_for(a.tol);

    if (a.route == "numeric") {
        if (is_H) {
            double v = H_numeric(kind, s, a.N, spec);
            out["value"] = v;
            // the Gram entries are integrated to rel_tol; the determinant
            // amplifies that by a small factor
            out["error_estimate"] = std::abs(v) * spec.rel_tol * 10.0 * a.N;
        } else {
            double pf = F_numeric(kind, s, a.N, spec);
            double det = F_numeric_det_route(kind, s, a.N, spec);
            out["value"] = pf;
            out["routes"] = ordered_json{{"pfaffian", pf}, {"determinant", det}};
            out["error_estimate"] = std::abs(pf - det);
        }
        emit(out);
        return 0;
    }

    // oracle route
    if (a.N > 3) throw UsageError("the root-space oracle supports N <= 3");
    double v = is_H ? rootspace_oracle_H(kind, s, a.N, spec)
                    : rootspace_oracle_F(kind, s, a.N, spec);
    out["value"] = v;
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------
// volume: star-body volumes, exact / quadrature / Monte Carlo
// ---------------------------------------------------------------------------

struct VolumeArgs {
    std::string kind = "mahler";
    std::string field = "real";
    std::string route = "closed";
    int N = 1;
    double samples = 1e6;
    std::uint64_t seed = 1;
    int threads = 0;
    double tol = 0.0;
};

int cmd_volume(const VolumeArgs& a) {
    RootFunctionKind kind = parse_kind(a.kind);
    if (a.N < 1) throw UsageError("--N must be >= 1");
    bool real_field = a.field == "real";
    if (!real_field && a.field != "complex") throw UsageError("--field must be real or complex");
    ordered_json out{{"schema", 1}, {"command", "volume"}, {"kind", a.kind},
                     {"N", a.N},    {"field", a.field},    {"route", a.route}};

    if (a.route == "closed") {
        ExactVolume v;
        try {
            v = real_field ? star_volume_real_exact(kind, a.N)
                           : star_volume_complex_exact(kind, a.N);
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        out["pi_power"] = v.pi_power;
        out["value_times_pi^-k"] = rational_json(v.value);
        out["value"] = v.to_double();
        emit(out);
        return 0;
    }
    if (a.route == "numeric") {
        QuadratureSpec spec = spec_for(a.tol);
        double v = real_field ? star_volume_real_numeric(kind, a.N, spec)
                              : star_volume_complex_numeric(kind, a.N, spec);
        out["value"] = v;
        emit(out);
        return 0;
    }
    if (a.route == "mc") {
        if (!real_field) throw UsageError("the mc route samples real coefficient boxes only");
        if (!(a.samples >= 1.0)) throw UsageError("--samples must be at least 1");
        MCEstimate e = mc_star_volume(kind, a.N, static_cast<std::uint64_t>(a.samples), a.seed,
                                      thread_count(a.threads));
        out["value"] = e.value;
        out["std_error"] = e.std_error;
        out["samples"] = e.samples;
        out["seed"] = e.seed;
        emit(out);
        return 0;
    }
    throw UsageError("--route must be closed, numeric, or mc");
}

// ---------------------------------------------------------------------------
// count: exhaustive enumeration of bounded-measure reciprocal integer
// polynomials vs. the predicted asymptotic leading term
// ---------------------------------------------------------------------------

struct CountArgs {
    int N = 1;
    double T = 1.0;
    int threads = 0;
    bool force = false;
};

int cmd_count(const CountArgs& a) {
    if (a.N < 0) throw UsageError("--N must be >= 0");
    if (!(a.T >= 0.0)) throw UsageError("--T must be nonnegative");
    CountReport r = enumerate_reciprocal(a.N, a.T, thread_count(a.threads), a.force);
    emit({{"schema", 1},
          {"command", "count"},
          {"N", r.N},
          {"T", r.T},
          {"exact", r.exact_count},
          {"predicted", r.predicted},
          {"predicted_leading", rational_json(r.predicted_leading)}});
    return 0;
}

// ---------------------------------------------------------------------------
// trajectory: zeros and poles of the moment functions as t sweeps (0,1)
// ---------------------------------------------------------------------------

struct TrajectoryArgs {
    std::string type = "H";
    std::string grid;
    std::string out;
    int N = 6;
    bool json = false;
    double tol = 0.0;
};

int cmd_trajectory(const TrajectoryArgs& a) {
    std::vector<BigRational> grid;
    try {
        grid = rational_grid(a.grid);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (grid.empty()) throw UsageError("the t grid is empty");
    for (const BigRational& t : grid)
        if (!(t > 0 && t < 1)) throw UsageError("every t must lie strictly inside (0,1)");

    std::vector<TrajectoryPoint> pts;
    std::vector<std::string> warnings;
    if (a.type == "H") {
        if (a.N < 1 || a.N > 24) throw UsageError("--type H needs 1 <= N <= 24");
        pts = trajectory_H(a.N, grid);
    } else if (a.type == "F") {
        if (a.N < 2 || a.N % 2 != 0 || a.N > 6)
            throw UsageError("--type F needs even N between 2 and 6");
        TrajectoryFReport rep = trajectory_F(a.N, grid, spec_for(a.tol));
        pts = std::move(rep.points);
        warnings = std::move(rep.warnings);
    } else {
        throw UsageError("--type must be H or F");
    }
    for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';

    std::ostringstream body;
    if (a.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& p : pts)
            rows.push_back({{"t", rational_json(p.t)},
                            {"feature", feature_name(p.feature)},
                            {"index", p.index},
                            {"re_s", p.location.real()},
                            {"im_s", p.location.imag()},
                            {"multiplicity", p.multiplicity}});
        ordered_json out{{"schema", 1}, {"command", "trajectory"}, {"type", a.type},
                         {"N", a.N},    {"rows", rows},            {"warnings", warnings}};
        emit(out, body);
    } else {
        body << "t,feature,index,re_s,im_s\n";
        for (const auto& p : pts)
            body << to_string(p.t) << ',' << feature_name(p.feature) << ',' << p.index << ','
                 << fmt17(p.location.real()) << ',' << fmt17(p.location.imag()) << '\n';
    }

    if (a.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(a.out, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + a.out + "' for writing");
        file << body.str();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: self-check suites (coefficient table, exact Pfaffian identities,
// agreement of the independent moment routes)
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "table";
    int N = 2;
    int trials = 50;
    double tol = 0.0;
};

void push_check(ordered_json& checks, int& failed, const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    if (!ok) ++failed;
}

void verify_table(ordered_json& checks, int& failed) {
    static const char* expected[12] = {
        "2",           "4",           "16/3",           "32/3",
        "64/5",        "128/5",       "131072/4725",    "262144/4725",
        "655360/11907", "1310720/11907", "2147483648/21223125", "4294967296/21223125"};
    for (int N = 0; N <= 11; ++N) {
        BigRational got = count_leading_coefficient(N);
        bool ok = got == parse_rational(expected[N]);
        push_check(checks, failed,
                   "leading count coefficient N=" + std::to_string(N) + " equals " + expected[N],
                   ok);
    }
}

void verify_pfaffian(ordered_json& checks, int& failed, int trials) {
    std::mt19937_64 rng(0x5eedf00dULL);
    auto rand_int = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto rand_skew = [&](size_t n) {
        std::vector<BigRational> upper;
        upper.reserve(n * (n - 1) / 2);
        for (size_t k = 0; k < n * (n - 1) / 2; ++k) upper.emplace_back(rand_int(-9, 9));
        return SkewMatrix<BigRational>::from_upper(n, upper);
    };

    bool square_ok = true;
    for (size_t n = 2; n <= 10; n += 2)
        for (int tr = 0; tr < trials; ++tr) {
            auto u = rand_skew(n);
            BigRational pf = pfaffian(u);
            if (!(pf * pf == determinant(u.matrix()))) square_ok = false;
        }
    push_check(checks, failed, "Pf(U)^2 = det(U), sizes 2..10", square_ok);

    bool sum_ok = true;
    for (size_t n : {4u, 6u})
        for (int tr = 0; tr < trials; ++tr) {
            auto r = rand_skew(n), c = rand_skew(n);
            if (!(pfaffian(r + c) == pfaffian_sum_expansion(r, c))) sum_ok = false;
        }
    push_check(checks, failed, "Pf(R+C) sum expansion, sizes 4 and 6", sum_ok);

    bool restricted_ok = true;
    for (size_t n : {2u, 4u, 6u})
        for (int tr = 0; tr < trials; ++tr) {
            auto u = rand_skew(n);
            if (!(pfaffian_restricted_sum(u) == pfaffian(u))) restricted_ok = false;
        }
    push_check(checks, failed, "restricted-permutation Pfaffian sum, sizes 2..6", restricted_ok);

    bool checker_ok = true;
    for (size_t n : {2u, 4u, 6u})
        for (int tr = 0; tr < trials; ++tr) {
            Matrix<BigRational> m(n, n, BigRational(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if ((i + j) % 2 == 1) {
                        BigRational v{rand_int(-9, 9)};
                        m.at(i, j) = v;
                        m.at(j, i) = -v;
                    }
            SkewMatrix<BigRational> u(std::move(m));
            if (!(checkerboard_pfaffian(u) == pfaffian(u))) checker_ok = false;
        }
    push_check(checks, failed, "checkerboard reduction Pf = det of odd/even block", checker_ok);

    bool sign_ok = true;
    for (int L = 2; L <= 6; ++L)
        for (int tr = 0; tr < trials; ++tr) {
            std::vector<int> alpha(static_cast<size_t>(L));
            for (int& v : alpha) v = rand_int(-50, 50);
            std::vector<int> sorted = alpha;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                --tr;
                continue;
            }
            int K = (L + 1) / 2;
            size_t n = static_cast<size_t>(2 * K);
            Matrix<BigRational> m(n, n, BigRational(0));
            auto sgn = [](long v) { return (v > 0) - (v < 0); };
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    long d = (i < static_cast<size_t>(L) && j < static_cast<size_t>(L))
                                 ? alpha[j] - alpha[i]
                                 : static_cast<long>(j) - static_cast<long>(i);
                    m.at(i, j) = BigRational(sgn(d));
                }
            SkewMatrix<BigRational> t(std::move(m));
            int prod = 1;
            for (int i = 0; i < L; ++i)
                for (int j = i + 1; j < L; ++j) prod *= sgn(alpha[j] - alpha[i]);
            if (!(pfaffian(t) == BigRational(prod))) sign_ok = false;
        }
    push_check(checks, failed, "sign-product identity via bordered sign matrix, L <= 6", sign_ok);

    bool vander_ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int tr = 0; tr < trials; ++tr) {
            std::vector<int> g(static_cast<size_t>(n));
            for (int& v : g) v = rand_int(-20, 20);
            Matrix<BigRational> v(static_cast<size_t>(n), static_cast<size_t>(n));
            for (int row = 0; row < n; ++row)
                for (int col = 0; col < n; ++col)
                    v.at(static_cast<size_t>(row), static_cast<size_t>(col)) =
                        rat_pow(BigRational(g[static_cast<size_t>(col)]), row);
            BigRational prod(1);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    prod *= BigRational(g[static_cast<size_t>(b)] - g[static_cast<size_t>(a)]);
            if (!(determinant(v) == prod)) vander_ok = false;
        }
    push_check(checks, failed, "Vandermonde determinant product formula, n <= 6", vander_ok);
}

void verify_routes(ordered_json& checks, int& failed, int N, double tol) {
    double rel = tol > 0.0 ? tol : 1e-6;
    double oracle_rel = std::max(rel, 1e-4);
    auto rel_err = [](double a, double b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    };
    double s = N + 1.0;
    struct NamedKind {
        const char* name;
        RootFunctionKind kind;
        bool closed_F;
    };
    const NamedKind kinds[] = {
        {"mahler", RootFunctionKind::mahler(), true},
        {"reciprocal", RootFunctionKind::reciprocal(), true},
        {"trec:1/2", RootFunctionKind::t_reciprocal(make_rational(1, 2)), false},
    };
    for (const auto& nk : kinds) {
        std::string tag = std::string(nk.name) + ", N=" + std::to_string(N) +
                          ", s=" + std::to_string(N + 1);
        double pf = F_numeric(nk.kind, s, N);
        double det = F_numeric_det_route(nk.kind, s, N);
        push_check(checks, failed, "F pfaffian vs determinant route (" + tag + ")",
                   rel_err(pf, det) <= rel);
        if (nk.closed_F) {
            double closed = F_closed(nk.kind, N).value(s);
            push_check(checks, failed, "F closed form vs pfaffian route (" + tag + ")",
                       rel_err(closed, pf) <= rel);
        }
        double gram = H_numeric(nk.kind, s, N);
        double h_closed = H_closed(nk.kind, N).value(s);
        push_check(checks, failed, "H closed form vs Gram route (" + tag + ")",
                   rel_err(h_closed, gram) <= rel);
        if (N <= 3) {
            push_check(checks, failed, "F root-space oracle vs pfaffian route (" + tag + ")",
                       rel_err(rootspace_oracle_F(nk.kind, s, N), pf) <= oracle_rel);
            push_check(checks, failed, "H root-space oracle vs Gram route (" + tag + ")",
                       rel_err(rootspace_oracle_H(nk.kind, s, N), gram) <= oracle_rel);
        }
    }
}

int cmd_verify(const VerifyArgs& a) {
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    ordered_json checks = ordered_json::array();
    int failed = 0;
    if (a.suite == "table") {
        verify_table(checks, failed);
    } else if (a.suite == "pfaffian") {
        verify_pfaffian(checks, failed, a.trials);
    } else if (a.suite == "routes") {
        if (a.N < 1 || a.N > 4) throw UsageError("--suite routes supports 1 <= N <= 4");
        verify_routes(checks, failed, a.N, a.tol);
    } else {
        throw UsageError("--suite must be table, pfaffian, or routes");
    }
    emit({{"schema", 1},
          {"command", "verify"},
          {"suite", a.suite},
          {"checks", checks},
          {"failed", failed}});
    return failed == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicative distance functions on polynomials: Mahler-type measures,\n"
                 "moment functions, star-body volumes, and reciprocal-polynomial counts"};
    app.require_subcommand(1);
    bool json_flag = false; // accepted everywhere; JSON is already the default output

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "distance of a polynomial under a chosen kind");
    eval->add_option("--kind", ev.kind, "mahler | reciprocal | trec:<p/q>");
    eval->add_option("--poly", ev.poly, "comma-separated coefficients, leading first")
        ->required();
    eval->add_option("--tol", ev.tol, "root-finding tolerance");
    eval->add_flag("--json", json_flag, "emit JSON (the default)");

    MomentArgs mo;
    auto* moment = app.add_subcommand("moment", "moment functions H_N and F_N");
    moment->add_option("--type", mo.type, "H | F")->required();
    moment->add_option("--kind", mo.kind, "mahler | reciprocal | trec:<p/q>");
    moment->add_option("--N", mo.N, "degree")->required();
    moment->add_option("--route", mo.route, "closed | numeric | oracle");
    moment->add_option("--s", mo.s, "evaluation point (rational or decimal)");
    moment->add_option("--tol", mo.tol, "quadrature relative tolerance");
    moment->add_flag("--json", json_flag, "emit JSON (the default)");

    VolumeArgs vo;
    auto* volume = app.add_subcommand("volume", "star-body volume of the unit sublevel set");
    volume->add_option("--kind", vo.kind, "mahler | reciprocal | trec:<p/q>");
    volume->add_option("--N", vo.N, "degree")->required();
    volume->add_option("--field", vo.field, "real | complex");
    volume->add_option("--route", vo.route, "closed | numeric | mc");
    volume->add_option("--samples", vo.samples, "Monte Carlo samples (mc route)");
    volume->add_option("--seed", vo.seed, "Monte Carlo seed (mc route)");
    volume->add_option("--threads", vo.threads, "worker threads (default: MDIST_THREADS or cores)");
    volume->add_option("--tol", vo.tol, "quadrature relative tolerance (numeric route)");
    volume->add_flag("--json", json_flag, "emit JSON (the default)");

    CountArgs co;
    auto* count = app.add_subcommand("count", "reciprocal integer polynomials with measure <= T");
    count->add_option("--N", co.N, "degree")->required();
    count->add_option("--T", co.T, "measure bound")->required();
    count->add_option("--threads", co.threads, "worker threads (default: MDIST_THREADS or cores)");
    count->add_flag("--force", co.force, "override the enumeration budget guard");
    count->add_flag("--json", json_flag, "emit JSON (the default)");

    TrajectoryArgs tr;
    auto* traj = app.add_subcommand("trajectory", "zeros and poles of H/F across t in (0,1)");
    traj->add_option("--type", tr.type, "H | F");
    traj->add_option("--N", tr.N, "degree")->required();
    traj->add_option("--t", tr.grid, "t grid as lo:hi:step (exact rationals)")->required();
    traj->add_option("--out", tr.out, "output path (default: stdout)");
    traj->add_option("--tol", tr.tol, "quadrature relative tolerance (F only)");
    traj->add_flag("--json", tr.json, "emit JSON rows instead of CSV");

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "run a self-check suite");
    verify->add_option("--suite", ve.suite, "table | pfaffian | routes")->required();
    verify->add_option("--N", ve.N, "degree for the routes suite");
    verify->add_option("--trials", ve.trials, "randomized trials per identity (pfaffian suite)");
    verify->add_option("--tol", ve.tol, "relative tolerance override (routes suite)");
    verify->add_flag("--json", json_flag, "emit JSON (the default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(ev);
        if (moment->parsed()) return cmd_moment(mo);
        if (volume->parsed()) return cmd_volume(vo);
        if (count->parsed()) return cmd_count(co);
        if (traj->parsed()) return cmd_trajectory(tr);
        if (verify->parsed()) return cmd_verify(ve);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
