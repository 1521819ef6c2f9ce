// Command-line surface for the classification engines: exact-arithmetic
// profiles, Hilbert series, twist orbits, descent chains, constructions,
// and the brute-force oracle suites.
//
// Exit codes: 0 success, 2 parse/validation error, 1 internal assertion
// failure (a bug), 3 oracle violation.

#include "rmtori/classify.hpp"
#include "rmtori/construct.hpp"
#include "rmtori/errors.hpp"
#include "rmtori/json_io.hpp"
#include "rmtori/oracle.hpp"
#include "rmtori/series.hpp"
#include "rmtori/twist.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rmtori;

std::vector<Integer> parse_integer_list(const std::string& csv, std::size_t expected,
                                        const std::string& what) {
    std::vector<Integer> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(integer_from_string(tok));
    if (out.size() != expected)
        throw Error(what + ": expected " + std::to_string(expected) +
                    " comma-separated integers, got " + std::to_string(out.size()));
    return out;
}

SL2Matrix parse_matrix(const std::string& csv) {
    auto v = parse_integer_list(csv, 4, "matrix");
    return SL2Matrix(v[0], v[1], v[2], v[3]);  // row-major
}

KVector parse_vector(const std::string& csv) {
    auto v = parse_integer_list(csv, 2, "vector");
    return KVector(v[0], v[1]);
}

AlphaFlag parse_alpha(const std::string& s) {
    if (s == "trivial") return AlphaFlag::Trivial;
    if (s == "unknown" || s == "nontrivial-or-unknown") return AlphaFlag::NontrivialOrUnknown;
    throw Error("alpha flag must be 'trivial' or 'unknown', got '" + s + "'");
}

std::string poly_str(const QPoly& p, const char* var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        std::string term;
        if (i == 0) {
            term = c.str();
        } else {
            if (c == 1)
                term = "";
            else if (c == -1)
                term = "-";
            else
                term = c.str() + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s;
}

std::string ratfun_str(const QRatFun& f) {
    return "(" + poly_str(f.num()) + ") / (" + poly_str(f.den()) + ")";
}

std::string verdict_str(const Verdict& v) {
    std::string s = to_string(v.status);
    if (v.status == VerdictStatus::BoundaryConditional) s += " [" + v.note + "]";
    return s;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const std::string& gcsv, const std::string& vcsv, const std::string& alpha,
                 bool json, std::size_t horizon) {
    AlgebraProfile p = profile(parse_matrix(gcsv), parse_vector(vcsv), parse_alpha(alpha));
    if (json) {
        emit(profile_to_json(p, horizon));
        return 0;
    }
    std::cout << "g:            " << p.g << "\n";
    std::cout << "v0:           " << p.v0 << "\n";
    std::cout << "N = tr(g):    " << p.N << "\n";
    std::cout << "M = chi:      " << p.M << "\n";
    std::cout << "eigen class:  " << to_string(p.eigen_class) << "\n";
    std::cout << "alpha flag:   " << to_string(p.alpha_flag) << "\n";
    if (p.theta_attract) {
        std::cout << "theta (attracting):  " << *p.theta_attract << "\n";
        std::cout << "theta (repelling):   " << *p.theta_repel << "\n";
        std::cout << "base in heart:       "
                  << (p.base_in_attracting_halfplane ? "yes" : "no (shifted)") << "\n";
    }
    if (!p.eigenprop_admissible()) {
        std::cout << "profile is not admissible (needs positive real eigenvalues and M > 0);"
                  << " verdicts unavailable\n";
        return 0;
    }
    std::cout << "hilbert:      " << ratfun_str(p.hilbert()) << "\n";
    auto coeffs = p.hilbert().coefficients(horizon);
    std::cout << "coefficients:";
    for (const auto& c : coeffs) std::cout << " " << c.str();
    std::cout << "\n";
    std::cout << "degree_one_generated: " << verdict_str(degree_one_generated(p)) << "\n";
    std::cout << "quadratic:            " << verdict_str(quadratic(p)) << "\n";
    std::cout << "koszul:               " << verdict_str(koszul(p)) << "\n";
    std::cout << "finitely_generated:   " << verdict_str(finitely_generated(p)) << "\n";
    if (p.is_unipotent() || p.base_in_attracting_halfplane)
        std::cout << "ample:                " << verdict_str(ample(p)) << "\n";
    else
        std::cout << "ample:                not applicable (base outside attracting heart)\n";
    if (koszul(p).status == VerdictStatus::Holds) {
        AlgebraProfile dual = koszul_dual(p);
        std::cout << "koszul dual:  g! = " << dual.g << "  (N! = " << dual.N
                  << ", M! = " << dual.M << ")\n";
    }
    return 0;
}

int cmd_hilbert(long long n, long long m, bool json, std::size_t horizon, bool dual) {
    QRatFun h = hilbert_series(n, m);
    if (dual) h = dual_series(h);
    if (json) {
        Json j = to_json(h);
        Json arr = Json::array();
        for (const auto& c : h.coefficients(horizon)) arr.push_back(c.str());
        j["coefficients"] = arr;
        emit(j);
        return 0;
    }
    std::cout << (dual ? "dual series:  " : "hilbert:      ") << ratfun_str(h) << "\n";
    std::cout << "coefficients:";
    for (const auto& c : h.coefficients(horizon)) std::cout << " " << c.str();
    std::cout << "\n";
    return 0;
}

int cmd_orbit(const std::string& gcsv, const std::string& vcsv, bool json, std::size_t horizon) {
    AlgebraProfile p = profile(parse_matrix(gcsv), parse_vector(vcsv));
    TwistOrbit orbit = twist_orbit(p, horizon);
    if (json) {
        emit(orbit_to_json(orbit));
        return 0;
    }
    std::cout << "chi table (n, m) for the twist orbit, horizon " << horizon << ":\n";
    for (std::size_t n = 0; n < horizon; ++n) {
        std::cout << "  n=" << n << ":";
        for (std::size_t m = n + 1; m <= horizon; ++m)
            std::cout << " " << orbit.chi_at(n, m).str();
        std::cout << "\n";
    }
    std::cout << "rank sequence:\n";
    for (std::size_t n = 0; n <= horizon; ++n)
        std::cout << "  rk[" << n << "] = " << orbit.rk_seq[n] << "\n";
    return 0;
}

int cmd_descent(long long a, long long b, long long c, const std::string& vcsv, long long steps,
                bool json) {
    QuadOrder order{Integer(a), Integer(b), Integer(c)};
    QuadNum theta = theta_of(order);
    auto chain = descent_chain(theta, parse_vector(vcsv), static_cast<std::size_t>(steps));
    if (json) {
        Json arr = Json::array();
        for (const auto& w : chain) arr.push_back(to_json(w));
        Json j;
        j["theta"] = to_json(theta);
        j["chain"] = arr;
        emit(j);
        return 0;
    }
    std::cout << "theta = " << theta << "\n";
    for (const auto& w : chain) std::cout << w << "\n";
    return 0;
}

int cmd_construct_rm(long long a, long long b, long long c, bool koszul_grade, bool json,
                     std::size_t horizon) {
    RmPair pair = rm_pair(QuadOrder(Integer(a), Integer(b), Integer(c)), koszul_grade);
    if (json) {
        Json j;
        j["theta"] = to_json(pair.theta);
        j["unit"] = to_json(pair.unit);
        j["g"] = to_json(pair.g);
        j["v"] = to_json(pair.v);
        j["profile"] = profile_to_json(pair.prof, horizon);
        emit(j);
        return 0;
    }
    std::cout << "theta:  " << pair.theta << "\n";
    std::cout << "unit r: " << pair.unit << "\n";
    std::cout << "g:      " << pair.g << "\n";
    std::cout << "v:      " << pair.v << "\n";
    std::cout << "N = " << pair.prof.N << ", M = " << pair.prof.M << "\n";
    std::cout << "ample:  " << verdict_str(ample(pair.prof)) << "\n";
    return 0;
}

int cmd_ample_seq(long long a, long long b, long long c, long long count, bool json) {
    QuadOrder order{Integer(a), Integer(b), Integer(c)};
    QuadNum theta = theta_of(order);
    auto items = ample_sequence(theta, static_cast<std::size_t>(count));
    if (json) {
        emit(ample_items_to_json(items, theta));
        return 0;
    }
    std::cout << "theta = " << theta << "\n";
    std::cout << "d\tr\tmu\n";
    for (const auto& it : items)
        std::cout << it.d.str() << "\t" << it.r.str() << "\t" << it.mu().str() << "\n";
    return 0;
}

int cmd_survey(long long n_min, long long n_max, long long m_min, long long m_max,
               const std::string& alpha) {
    AlphaFlag flag = parse_alpha(alpha);
    std::cout << "N,M,degree_one,quadratic,koszul,finitely_generated,ample\n";
    for (long long n = n_min; n <= n_max; ++n) {
        for (long long m = m_min; m <= m_max; ++m) {
            std::cout << n << "," << m;
            if (n < 2 || m < 1) {
                std::cout << ",n/a,n/a,n/a,n/a,n/a\n";
                continue;
            }
            auto word = [](const Verdict& v) { return std::string(to_string(v.status)); };
            std::cout << "," << word(rule_degree_one_generated(n, m));
            std::cout << "," << word(rule_quadratic(n, m, flag));
            std::cout << "," << word(rule_koszul(n, m));
            std::cout << "," << word(rule_finitely_generated(n, m));
            // Unipotent orbits are ample for every M >= 1; hyperbolic ones
            // exactly when M >= N - 1.
            std::cout << "," << (n == 2 ? "holds" : (m >= n - 1 ? "holds" : "fails")) << "\n";
        }
    }
    return 0;
}

int cmd_oracle(const std::string& suite, long entry_bound) {
    bool ok = true;
    auto report_line = [&](const std::string& name, bool passed) {
        std::cout << (passed ? "ok   " : "FAIL ") << name << "\n";
        ok = ok && passed;
    };
    if (suite == "all") {
        oracle::SuiteReport rep = oracle::run_all(entry_bound);
        std::cout << rep.checks_run << " oracle checks run\n";
        for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
        if (rep.ok) std::cout << "all oracle suites passed\n";
        return rep.ok ? 0 : 3;
    }
    if (suite == "series") {
        bool pass = true;
        for (long n = -5; n <= 10; ++n)
            for (long m = -5; m <= 15; ++m) pass = pass && oracle::series_vs_recurrence(n, m, 20);
        report_line("series_vs_recurrence box [-5,10]x[-5,15]", pass);
    } else if (suite == "bivariate") {
        bool pass = true;
        for (long n = 2; n <= 10; ++n)
            for (long m = 1; m <= 15; ++m)
                pass = pass && oracle::bivariate_identity_check(n, m, 10);
        report_line("bivariate_identity_check [2,10]x[1,15]", pass);
    } else if (suite == "eigenlem") {
        report_line("exhaustive_eigenlem", oracle::exhaustive_eigenlem(entry_bound, 3, 40).empty());
    } else if (suite == "dual-matrix") {
        report_line("dual_matrix_check(50)", oracle::dual_matrix_check(50));
    } else {
        throw Error("unknown oracle suite '" + suite +
                    "' (expected all|series|bivariate|eigenlem|dual-matrix)");
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-theoretic classification of coordinate algebras of "
                 "noncommutative tori with real multiplication"};
    app.require_subcommand(1);

    std::string gcsv, vcsv, alpha = "unknown", suite = "all";
    long long n = 0, m = 0, order_a = 1, order_b = 0, order_c = -2;
    long long steps = 10, count = 20;
    long long n_min = 2, n_max = 6, m_min = 1, m_max = 10;
    long entry_bound = 3;
    bool json = false, koszul_grade = false;
    std::size_t horizon = 10;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit machine-readable JSON");
        sub->add_option("--horizon", horizon, "coefficient/table horizon")->check(CLI::Range(0, 200));
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a profile (g, v0)");
    classify_cmd->add_option("-g,--matrix", gcsv, "matrix a,b,c,d row-major")->required();
    classify_cmd->add_option("-v,--vector", vcsv, "base vector deg,rk")->required();
    classify_cmd->add_option("--alpha", alpha, "alpha flag: trivial|unknown");
    add_common(classify_cmd);

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series for invariants (N, M)");
    hilbert_cmd->add_option("-N", n, "trace N")->required();
    hilbert_cmd->add_option("-M", m, "pairing M")->required();
    add_common(hilbert_cmd);

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual Hilbert series for (N, M)");
    dual_cmd->add_option("-N", n, "trace N")->required();
    dual_cmd->add_option("-M", m, "pairing M")->required();
    add_common(dual_cmd);

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "twist-orbit chi table and rank sequence");
    orbit_cmd->add_option("-g,--matrix", gcsv, "matrix a,b,c,d row-major")->required();
    orbit_cmd->add_option("-v,--vector", vcsv, "base vector deg,rk")->required();
    add_common(orbit_cmd);

    CLI::App* descent_cmd = app.add_subcommand("descent", "non-Noetherian descent chain");
    descent_cmd->add_option("--alpha", order_a, "order coefficient alpha")->required();
    descent_cmd->add_option("--beta", order_b, "order coefficient beta")->required();
    descent_cmd->add_option("--gamma", order_c, "order coefficient gamma")->required();
    descent_cmd->add_option("-v,--vector", vcsv, "starting vector deg,rk")->required();
    descent_cmd->add_option("-n,--steps", steps, "chain length")->check(CLI::Range(0, 10000));
    descent_cmd->add_flag("--json", json, "emit machine-readable JSON");

    CLI::App* rm_cmd = app.add_subcommand("construct-rm", "realize real multiplication by an order");
    rm_cmd->add_option("--alpha", order_a, "order coefficient alpha")->required();
    rm_cmd->add_option("--beta", order_b, "order coefficient beta")->required();
    rm_cmd->add_option("--gamma", order_c, "order coefficient gamma")->required();
    rm_cmd->add_flag("--koszul-grade", koszul_grade, "search until M >= N + 2");
    add_common(rm_cmd);

    CLI::App* seq_cmd = app.add_subcommand("ample-seq", "ample sequence approaching theta");
    seq_cmd->add_option("--theta-alpha", order_a, "theta equation coefficient alpha")->required();
    seq_cmd->add_option("--theta-beta", order_b, "theta equation coefficient beta")->required();
    seq_cmd->add_option("--theta-gamma", order_c, "theta equation coefficient gamma")->required();
    seq_cmd->add_option("--count", count, "number of items")->check(CLI::Range(0, 100000));
    seq_cmd->add_flag("--json", json, "emit machine-readable JSON");

    CLI::App* survey_cmd = app.add_subcommand("survey", "verdict phase table over (N, M) as CSV");
    survey_cmd->add_option("--n-min", n_min, "lowest N");
    survey_cmd->add_option("--n-max", n_max, "highest N");
    survey_cmd->add_option("--m-min", m_min, "lowest M");
    survey_cmd->add_option("--m-max", m_max, "highest M");
    survey_cmd->add_option("--alpha", alpha, "alpha flag: trivial|unknown");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent brute-force verifiers");
    CLI::App* oracle_run = oracle_cmd->add_subcommand("run", "run oracle suites");
    oracle_run->add_option("--suite", suite, "all|series|bivariate|eigenlem|dual-matrix");
    oracle_run->add_option("--entry-bound", entry_bound, "matrix entry bound for scans")
        ->check(CLI::Range(1, 4));
    oracle_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (classify_cmd->parsed()) return cmd_classify(gcsv, vcsv, alpha, json, horizon);
        if (hilbert_cmd->parsed()) return cmd_hilbert(n, m, json, horizon, false);
        if (dual_cmd->parsed()) return cmd_hilbert(n, m, json, horizon, true);
        if (orbit_cmd->parsed()) return cmd_orbit(gcsv, vcsv, json, horizon);
        if (descent_cmd->parsed())
            return cmd_descent(order_a, order_b, order_c, vcsv, steps, json);
        if (rm_cmd->parsed())
            return cmd_construct_rm(order_a, order_b, order_c, koszul_grade, json, horizon);
        if (seq_cmd->parsed()) return cmd_ample_seq(order_a, order_b, order_c, count, json);
        if (survey_cmd->parsed()) return cmd_survey(n_min, n_max, m_min, m_max, alpha);
        if (oracle_cmd->parsed()) return cmd_oracle(suite, entry_bound);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
