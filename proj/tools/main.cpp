#include <repint/builtins.hpp>
#include <repint/harmonic.hpp>
#include <repint/logprimitive.hpp>
#include <repint/partitions.hpp>
#include <repint/recurrent.hpp>
#include <repint/repeated.hpp>
#include <repint/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace repint;

namespace {

json rat_json(const Rat& q) { return json{{"num", num_str(q)}, {"den", den_str(q)}}; }

json checks_json(const Suite& s) {
    json arr = json::array();
    for (const auto& c : s.checks)
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass}});
    return arr;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

void print_suite_text(const Suite& s) {
    for (const auto& c : s.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected
                  << "  actual=" << c.actual << "\n";
    std::cout << s.name << ": " << (s.checks.size() - s.failed()) << "/" << s.checks.size()
              << " passed\n";
}

// Shared numeric-option block for the quadrature-backed subcommands.
struct QuadOpts {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 50;

    void attach(CLI::App* cmd) {
        cmd->add_option("--abs-tol", abs_tol, "absolute quadrature tolerance");
        cmd->add_option("--rel-tol", rel_tol, "relative quadrature tolerance");
        cmd->add_option("--max-depth", max_depth, "max bisection depth");
    }
    QuadCfg cfg() const { return QuadCfg{abs_tol, rel_tol, max_depth}; }
};

int run(int argc, char** argv) {
    CLI::App app{"exact and numeric checks for repeated/recurrent integration formulas"};
    app.require_subcommand(1);

    // ---- partitions ------------------------------------------------------
    auto* cmd_part = app.add_subcommand("partitions", "enumerate integer partitions");
    long part_m = 0;
    std::string part_format = "parts";
    bool part_json = false;
    cmd_part->add_option("m", part_m, "integer to partition")->required();
    cmd_part->add_option("--format", part_format, "parts|multi")
        ->check(CLI::IsMember({"parts", "multi"}));
    cmd_part->add_flag("--json", part_json, "emit JSON array of arrays");

    // ---- mhss ------------------------------------------------------------
    auto* cmd_mhss = app.add_subcommand("mhss", "multiple harmonic star sum");
    long mhss_q = 1, mhss_n = 1;
    std::vector<long> mhss_s;
    bool mhss_json = false;
    cmd_mhss->add_option("--q", mhss_q, "lower bound (>= 1)")->required();
    cmd_mhss->add_option("--n", mhss_n, "upper bound")->required();
    cmd_mhss->add_option("--s", mhss_s, "exponents, comma separated")->delimiter(',');
    cmd_mhss->add_flag("--json", mhss_json);

    // ---- primitive -------------------------------------------------------
    auto* cmd_prim = app.add_subcommand("primitive", "closed-form n-th antiderivative of x^m ln^mp x");
    long prim_n = 1, prim_m = 0, prim_mp = 0;
    std::string prim_form = "mhss";
    bool prim_json = false, prim_latex = false;
    cmd_prim->add_option("--n", prim_n)->required();
    cmd_prim->add_option("--m", prim_m)->required();
    cmd_prim->add_option("--mp", prim_mp)->required();
    cmd_prim->add_option("--form", prim_form, "mhss|partition|alternating")
        ->check(CLI::IsMember({"mhss", "partition", "alternating"}));
    cmd_prim->add_flag("--json", prim_json);
    cmd_prim->add_flag("--latex", prim_latex);

    // ---- repeat ----------------------------------------------------------
    auto* cmd_rep = app.add_subcommand("repeat", "definite n-fold repeated integral");
    std::string rep_f = "one";
    long rep_n = 1, rep_m = 0, rep_mp = 0;
    double rep_a = 0.0, rep_b = 1.0;
    std::string rep_method = "ftc";
    bool rep_paper_literal = false, rep_json = false;
    QuadOpts rep_quad;
    cmd_rep->add_option("--f", rep_f, "builtin integrand (one,x,x2,ln,xln,exp,sin,xmlnx)")
        ->required();
    cmd_rep->add_option("--m", rep_m, "power of x (for --f xmlnx)");
    cmd_rep->add_option("--mp", rep_mp, "power of ln x (for --f xmlnx)");
    cmd_rep->add_option("--n", rep_n)->required();
    cmd_rep->add_option("--a", rep_a)->required();
    cmd_rep->add_option("--b", rep_b)->required();
    cmd_rep->add_option("--method", rep_method, "ftc|moments|cauchy|nested|explicit")
        ->check(CLI::IsMember({"ftc", "moments", "cauchy", "nested", "explicit"}));
    cmd_rep->add_flag("--paper-literal", rep_paper_literal,
                      "drop the 1/(n-k)! divisor on lower-endpoint terms (known-bad variant)");
    cmd_rep->add_flag("--json", rep_json);
    rep_quad.attach(cmd_rep);

    // ---- recur -----------------------------------------------------------
    auto* cmd_rec = app.add_subcommand("recur", "definite n-fold recurrent integral");
    std::string rec_f = "exp";
    long rec_n = 1;
    double rec_a = 0.0, rec_b = 1.0;
    std::string rec_method = "closed";
    bool rec_json = false;
    QuadOpts rec_quad;
    cmd_rec->add_option("--f", rec_f,
                        "builtin integrand (one,x,x2,ln,xln,exp,sin)")
        ->required();
    cmd_rec->add_option("--n", rec_n)->required();
    cmd_rec->add_option("--a", rec_a)->required();
    cmd_rec->add_option("--b", rec_b)->required();
    cmd_rec->add_option("--method", rec_method, "closed|partition|ftc|nested")
        ->check(CLI::IsMember({"closed", "partition", "ftc", "nested"}));
    cmd_rec->add_flag("--json", rec_json);
    rec_quad.attach(cmd_rec);

    // ---- identity --------------------------------------------------------
    auto* cmd_id = app.add_subcommand("identity", "partition identities from recurrent integrals");
    std::string id_theorem = "2.10";
    long id_max_n = 10;
    bool id_json = false;
    cmd_id->add_option("--theorem", id_theorem, "2.10|c1|c2|c3")
        ->check(CLI::IsMember({"2.10", "c1", "c2", "c3"}));
    cmd_id->add_option("--max-n", id_max_n);
    cmd_id->add_flag("--json", id_json);

    // ---- harmonic-identity -------------------------------------------------
    auto* cmd_hid = app.add_subcommand("harmonic-identity", "alternating/repeated harmonic identities");
    std::string hid_theorem = "4.1";
    long hid_max_n = 10, hid_max_m = 4, hid_max_k = 3;
    bool hid_json = false;
    cmd_hid->add_option("--theorem", hid_theorem, "4.1|4.2|4.3")
        ->check(CLI::IsMember({"4.1", "4.2", "4.3"}));
    cmd_hid->add_option("--max-n", hid_max_n);
    cmd_hid->add_option("--max-m", hid_max_m);
    cmd_hid->add_option("--max-k", hid_max_k);
    cmd_hid->add_flag("--json", hid_json);

    // ---- conjecture --------------------------------------------------------
    auto* cmd_conj = app.add_subcommand("conjecture", "symmetrized recurrent-integral check");
    std::vector<std::string> conj_fs;
    long conj_n = 0;  // 0 = infer from --fs
    double conj_a = 0.0, conj_b = 1.0, conj_tol = 1e-7;
    bool conj_json = false;
    QuadOpts conj_quad;
    conj_quad.abs_tol = 1e-9;
    conj_quad.rel_tol = 1e-9;
    cmd_conj->add_option("--fs", conj_fs, "2 or 3 builtin names, comma separated")
        ->delimiter(',')
        ->required();
    cmd_conj->add_option("--n", conj_n, "order; must match the number of names in --fs");
    cmd_conj->add_option("--a", conj_a)->required();
    cmd_conj->add_option("--b", conj_b)->required();
    cmd_conj->add_option("--tol", conj_tol, "relative tolerance for the pass check");
    cmd_conj->add_flag("--json", conj_json);
    conj_quad.attach(cmd_conj);

    // ---- verify-all --------------------------------------------------------
    auto* cmd_all = app.add_subcommand("verify-all", "run every identity suite");
    bool all_quick = false, all_full = false, all_json = false;
    cmd_all->add_flag("--quick", all_quick, "desk-scale grids (default)");
    cmd_all->add_flag("--full", all_full, "extended grids");
    cmd_all->add_flag("--json", all_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine usage errors exit 2.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // ---- dispatch ----------------------------------------------------------
    if (*cmd_part) {
        const auto parts = enumerate_parts(part_m);
        if (part_json) {
            json arr = json::array();
            for (const auto& p : parts) {
                if (part_format == "parts")
                    arr.push_back(p.parts);
                else
                    arr.push_back(to_multi(p).mult);
            }
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& p : parts) {
                const auto& v =
                    (part_format == "parts") ? p.parts : to_multi(p).mult;
                if (v.empty()) {
                    std::cout << "(empty)\n";
                    continue;
                }
                for (size_t i = 0; i < v.size(); ++i)
                    std::cout << v[i] << (i + 1 < v.size() ? " " : "\n");
            }
            std::cout << "count: " << parts.size() << "\n";
        }
        return 0;
    }

    if (*cmd_mhss) {
        MhssSpec spec{mhss_q, mhss_n, mhss_s};
        const Rat v = mhss(spec);
        if (mhss_json) {
            json rep = {{"command", "mhss"},
                        {"inputs", {{"q", mhss_q}, {"n", mhss_n}, {"s", mhss_s}}},
                        {"outputs", {{"value", rat_json(v)}, {"exact", true}}},
                        {"checks", json::array()}};
            std::cout << rep.dump() << "\n";
        } else {
            std::cout << rat_str(v) << "\n";
        }
        return 0;
    }

    if (*cmd_prim) {
        LogPoly p;
        if (prim_form == "mhss")
            p = nth_primitive_mhss({prim_n, prim_m, prim_mp});
        else if (prim_form == "partition")
            p = nth_primitive_partitions({prim_n, prim_m, prim_mp});
        else {
            if (prim_mp != 1)
                throw CLI::ValidationError("--form alternating requires --mp 1");
            p = nth_primitive_ln_alternating(prim_n, prim_m);
        }
        if (prim_json) {
            json terms = json::array();
            for (const auto& t : p.terms)
                terms.push_back({{"a", rat_str(t.a)},
                                 {"k", t.k},
                                 {"c_num", num_str(t.c)},
                                 {"c_den", den_str(t.c)}});
            json rep = {{"command", "primitive"},
                        {"inputs",
                         {{"n", prim_n}, {"m", prim_m}, {"mp", prim_mp}, {"form", prim_form}}},
                        {"outputs", {{"terms", terms}, {"exact", true}}},
                        {"checks", json::array()}};
            std::cout << rep.dump() << "\n";
        } else if (prim_latex) {
            std::cout << to_latex(p) << "\n";
        } else {
            std::cout << to_plain(p) << "\n";
        }
        return 0;
    }

    if (*cmd_rep) {
        const Builtin f = (rep_f == "xmlnx") ? make_xmlnx(rep_m, rep_mp) : builtin(rep_f);
        const Interval iv{rep_a, rep_b};
        const QuadCfg cfg = rep_quad.cfg();
        if (rep_paper_literal && (rep_method != "ftc" || !f.has_power_log || !(iv.a > 0.0)))
            throw CLI::ValidationError(
                "--paper-literal applies only to --method ftc with a power-log integrand "
                "and a > 0");
        double value = 0.0;
        if (rep_method == "ftc") {
            if (f.has_power_log && iv.a > 0.0)
                value = definite_xm_lnx(rep_n, iv, f.m, f.mp, XmForm::ftc, rep_paper_literal);
            else
                value = definite_repeated_builtin_ftc(rep_n, iv, f, cfg);
        } else if (rep_method == "moments") {
            if (f.has_power_log && iv.a > 0.0)
                value = definite_xm_lnx(rep_n, iv, f.m, f.mp, XmForm::moments);
            else
                value = definite_repeated_builtin_moments(rep_n, iv, f, cfg);
        } else if (rep_method == "cauchy") {
            value = cauchy_formula(rep_n, iv, f.f, cfg);
        } else if (rep_method == "nested") {
            value = nested_quadrature(rep_n, iv, f.f, cfg);
        } else {  // explicit
            if (!f.has_power_log)
                throw CLI::ValidationError("--method explicit requires a power-log integrand");
            value = definite_xm_lnx(rep_n, iv, f.m, f.mp, XmForm::explicit_form);
        }
        if (rep_json) {
            json rep = {{"command", "repeat"},
                        {"inputs",
                         {{"f", f.name},
                          {"n", rep_n},
                          {"a", rep_a},
                          {"b", rep_b},
                          {"method", rep_method},
                          {"paper_literal", rep_paper_literal}}},
                        {"outputs", {{"value", value}, {"exact", false}}},
                        {"checks", json::array()}};
            std::cout << rep.dump() << "\n";
        } else {
            std::cout << fmt(value) << "\n";
        }
        return 0;
    }

    if (*cmd_rec) {
        const Builtin f = builtin(rec_f);
        const Interval iv{rec_a, rec_b};
        validate(iv, f.needs_positive_a);
        const QuadCfg cfg = rec_quad.cfg();
        double value = 0.0;
        if (rec_method == "closed")
            value = definite_recurrent_closed<double>(rec_n, f.F(rec_a), f.F(rec_b));
        else if (rec_method == "partition")
            value = definite_recurrent_partition<double>(rec_n, f.F(rec_a), f.F(rec_b));
        else if (rec_method == "ftc")
            value = definite_recurrent_ftc<double>(rec_n, rho_vector<double>(rec_n, f.F(rec_a)),
                                                   rho_vector<double>(rec_n, f.F(rec_b)));
        else
            value = nested_recurrent_quadrature(rec_n, iv, f.f, cfg);
        if (rec_json) {
            json rep = {{"command", "recur"},
                        {"inputs",
                         {{"f", rec_f},
                          {"n", rec_n},
                          {"a", rec_a},
                          {"b", rec_b},
                          {"method", rec_method}}},
                        {"outputs", {{"value", value}, {"exact", false}}},
                        {"checks", json::array()}};
            std::cout << rep.dump() << "\n";
        } else {
            std::cout << fmt(value) << "\n";
        }
        return 0;
    }

    if (*cmd_id) {
        Suite s;
        if (id_theorem == "2.10" || id_theorem == "c1" || id_theorem == "c2" ||
            id_theorem == "c3") {
            const Suite full = check_partition_identity_suite(id_max_n, 10);
            s.name = "identity-" + id_theorem;
            const std::string prefix = (id_theorem == "2.10") ? "2.10" : id_theorem;
            for (const auto& c : full.checks)
                if (c.name.rfind(prefix, 0) == 0) s.checks.push_back(c);
        }
        if (id_json) {
            json rep = {{"command", "identity"},
                        {"inputs", {{"theorem", id_theorem}, {"max_n", id_max_n}}},
                        {"outputs",
                         {{"total", s.checks.size()}, {"failed", s.failed()}}},
                        {"checks", checks_json(s)}};
            std::cout << rep.dump() << "\n";
        } else {
            print_suite_text(s);
        }
        return s.all_pass() ? 0 : 1;
    }

    if (*cmd_hid) {
        Suite s;
        if (hid_theorem == "4.1")
            s = check_harmonic_alternating(hid_max_n, hid_max_m);
        else if (hid_theorem == "4.2")
            s = check_harmonic_repeated(hid_max_n, hid_max_m);
        else
            s = check_harmonic_binomial(hid_max_n, hid_max_k, hid_max_m);
        if (hid_json) {
            json rep = {{"command", "harmonic-identity"},
                        {"inputs",
                         {{"theorem", hid_theorem},
                          {"max_n", hid_max_n},
                          {"max_m", hid_max_m},
                          {"max_k", hid_max_k}}},
                        {"outputs",
                         {{"total", s.checks.size()}, {"failed", s.failed()}}},
                        {"checks", checks_json(s)}};
            std::cout << rep.dump() << "\n";
        } else {
            print_suite_text(s);
        }
        return s.all_pass() ? 0 : 1;
    }

    if (*cmd_conj) {
        if (conj_fs.size() < 2 || conj_fs.size() > 3)
            throw CLI::ValidationError("--fs needs exactly 2 or 3 names");
        if (conj_n != 0 && conj_n != (long)conj_fs.size())
            throw CLI::ValidationError("--n must equal the number of names in --fs");
        std::vector<Builtin> fs;
        for (const auto& nm : conj_fs) fs.push_back(builtin(nm));
        const auto rep = conjecture_symmetrized_check(fs, Interval{conj_a, conj_b},
                                                      conj_quad.cfg());
        const bool pass = rep.rel_dev <= conj_tol;
        if (conj_json) {
            json doc = {{"command", "conjecture"},
                        {"inputs",
                         {{"fs", conj_fs}, {"a", conj_a}, {"b", conj_b}, {"tol", conj_tol}}},
                        {"outputs",
                         {{"symmetrized_sum", rep.symmetrized_sum},
                          {"product", rep.product},
                          {"abs_dev", rep.abs_dev},
                          {"rel_dev", rep.rel_dev},
                          {"exact", false}}},
                        {"checks",
                         json::array({{{"name", "symmetrized equals product"},
                                       {"expected", fmt(rep.product)},
                                       {"actual", fmt(rep.symmetrized_sum)},
                                       {"pass", pass}}})}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "symmetrized sum: " << fmt(rep.symmetrized_sum) << "\n"
                      << "product:         " << fmt(rep.product) << "\n"
                      << "abs dev:         " << fmt(rep.abs_dev) << "\n"
                      << "rel dev:         " << fmt(rep.rel_dev) << "\n"
                      << (pass ? "PASS" : "FAIL") << "\n";
        }
        return pass ? 0 : 1;
    }

    if (*cmd_all) {
        if (all_quick && all_full)
            throw CLI::ValidationError("choose one of --quick / --full");
        const auto suites = verify_all(all_full);
        size_t total = 0, failed = 0;
        for (const auto& s : suites) {
            total += s.checks.size();
            failed += s.failed();
        }
        if (all_json) {
            json suites_json = json::array();
            for (const auto& s : suites)
                suites_json.push_back({{"name", s.name},
                                       {"total", s.checks.size()},
                                       {"failed", s.failed()},
                                       {"checks", checks_json(s)}});
            json rep = {{"command", "verify-all"},
                        {"inputs", {{"profile", all_full ? "full" : "quick"}}},
                        {"outputs",
                         {{"suites", suites_json}, {"total", total}, {"failed", failed}}},
                        {"checks", json::array()}};
            std::cout << rep.dump() << "\n";
        } else {
            for (const auto& s : suites) {
                std::cout << s.name << ": " << (s.checks.size() - s.failed()) << "/"
                          << s.checks.size() << " passed\n";
                for (const auto& c : s.checks)
                    if (!c.pass)
                        std::cout << "  FAIL " << c.name << "  expected=" << c.expected
                                  << "  actual=" << c.actual << "\n";
            }
            std::cout << "total: " << (total - failed) << "/" << total << " passed\n";
        }
        return failed == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
