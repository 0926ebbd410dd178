// lform: exact computations with Hermitian and linking forms over Z[t^±1].
//
// Exit codes: 0 affirmative/success, 1 negative verdict, 2 inconclusive or
// unknown, 3 input error.

#include "lform/lform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using lform::json;

struct Report {
    std::string command;
    std::string verdict; // "ok", "yes", "no", "unknown", "error"
    int exit_code = 0;
    json data = json::object();
    std::string human;
};

bool g_json = false;
std::string g_input_file;

/// Single-input commands accept the argument positionally or via --input.
std::string pick_input(const std::string& positional) {
    if (!positional.empty()) return positional;
    if (!g_input_file.empty()) return g_input_file;
    throw std::invalid_argument("missing input (pass it positionally or with --input <file>)");
}

int emit(const Report& r) {
    if (g_json) {
        json out{{"tool", "lform"},
                 {"command", r.command},
                 {"verdict", r.verdict},
                 {"exit_code", r.exit_code},
                 {"data", r.data}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << r.human << "\n";
    }
    return r.exit_code;
}

int emit_error(const std::string& command, const std::string& message) {
    Report r;
    r.command = command;
    r.verdict = "error";
    r.exit_code = 3;
    r.data = json{{"message", message}};
    r.human = "error: " + message;
    if (g_json) return emit(r);
    std::cerr << r.human << "\n";
    return 3;
}

/// Positional arguments naming an existing file are read from disk;
/// anything else is taken verbatim.
std::string read_arg(const std::string& s) {
    std::ifstream in(s);
    if (!in.good()) return s;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

lform::LaurentPoly arg_poly(const std::string& raw) {
    const std::string s = read_arg(raw);
    if (!s.empty() && (s[0] == '{' || s[0] == '[')) return lform::poly_from_json(json::parse(s));
    return lform::parse_poly(s);
}

json arg_json(const std::string& raw) { return json::parse(read_arg(raw)); }

lform::PolyMatrix arg_poly_matrix(const std::string& raw) {
    return lform::poly_matrix_from_json(arg_json(raw));
}

std::string unit_to_string(const lform::RingUnit& u) {
    return lform::to_string(lform::to_poly(u));
}

// ---------------------------------------------------------------------------

Report cmd_laurent_eval(const std::string& parg) {
    Report r;
    r.command = "laurent eval";
    const auto p = arg_poly(parg);
    const auto v = p.evaluate_at_one();
    r.verdict = "ok";
    r.data = json{{"value", v.str()}};
    r.human = v.str();
    return r;
}

Report cmd_laurent_gcd(const std::string& pa, const std::string& pb) {
    Report r;
    r.command = "laurent gcd";
    const auto g = lform::gcd(arg_poly(pa), arg_poly(pb));
    r.verdict = "ok";
    r.data = json{{"gcd", lform::to_string(g)}};
    r.human = lform::to_string(g);
    return r;
}

Report cmd_laurent_bezout(const std::string& pa, const std::string& pb, int degree_bound) {
    Report r;
    r.command = "laurent bezout";
    const auto res = lform::bezout_one(arg_poly(pa), arg_poly(pb), degree_bound);
    if (res.found()) {
        r.verdict = "yes";
        r.exit_code = 0;
        r.data = json{{"x", lform::to_string(res.x)}, {"y", lform::to_string(res.y)}};
        r.human = "x = " + lform::to_string(res.x) + ", y = " + lform::to_string(res.y);
    } else if (res.impossible()) {
        r.verdict = "no";
        r.exit_code = 1;
        r.data = json{{"certificate", res.certificate}};
        r.human = "impossible: " + res.certificate;
    } else {
        r.verdict = "unknown";
        r.exit_code = 2;
        r.data = json{{"note", res.certificate}};
        r.human = "unknown: " + res.certificate;
    }
    return r;
}

Report cmd_laurent_doteq(const std::string& pa, const std::string& pb) {
    Report r;
    r.command = "laurent doteq";
    const auto u = lform::doteq(arg_poly(pa), arg_poly(pb));
    if (u) {
        r.verdict = "yes";
        r.data = json{{"unit", unit_to_string(*u)}, {"sign", u->sign}, {"exp", u->exp}};
        r.human = "equal up to the unit " + unit_to_string(*u);
    } else {
        r.verdict = "no";
        r.exit_code = 1;
        r.human = "not equal up to ±t^k";
    }
    return r;
}

Report cmd_form_check(const std::string& marg) {
    Report r;
    r.command = "form check";
    const bool ok = lform::check_hermitian(arg_poly_matrix(marg));
    r.verdict = ok ? "yes" : "no";
    r.exit_code = ok ? 0 : 1;
    r.human = ok ? "Hermitian" : "not Hermitian";
    return r;
}

Report cmd_form_even(const std::string& marg) {
    Report r;
    r.command = "form even";
    const lform::HermitianForm f(arg_poly_matrix(marg));
    const auto w = lform::is_even(f);
    if (w) {
        r.verdict = "yes";
        json ws = json::array();
        for (const auto& q : *w) ws.push_back(lform::to_string(q));
        r.data = json{{"witness", ws}};
        r.human = "even";
    } else {
        r.verdict = "no";
        r.exit_code = 1;
        r.human = "odd";
    }
    return r;
}

Report cmd_form_augment(const std::string& marg) {
    Report r;
    r.command = "form augment";
    const lform::HermitianForm f(arg_poly_matrix(marg));
    const auto a = lform::augment(f);
    r.verdict = "ok";
    r.data = json{{"matrix", lform::int_matrix_to_json(a)}};
    r.human = lform::int_matrix_to_json(a).dump();
    return r;
}

Report cmd_form_boundary(const std::string& marg) {
    Report r;
    r.command = "form boundary";
    const lform::HermitianForm f(arg_poly_matrix(marg));
    const auto l = lform::boundary_form(f);
    r.verdict = "ok";
    r.data = lform::linking_form_to_json(l);
    r.human = r.data.dump();
    return r;
}

Report cmd_form_aut(const std::string& marg, long deg_bound, long coeff_bound) {
    Report r;
    r.command = "form aut";
    const lform::HermitianForm f(arg_poly_matrix(marg));
    const auto res = lform::aut_search_bounded(f, deg_bound, lform::Int(coeff_bound));
    r.verdict = "ok";
    json list = json::array();
    for (const auto& u : res.isometries) list.push_back(lform::poly_matrix_to_json(u));
    r.data = json{{"isometries", list},
                  {"count", res.isometries.size()},
                  {"rank1_complete", res.rank1_complete},
                  {"note", res.note}};
    std::ostringstream os;
    os << res.isometries.size() << " isometries (" << res.note << ")";
    r.human = os.str();
    return r;
}

Report cmd_present_order(const std::string& marg) {
    Report r;
    r.command = "present order";
    const auto mod = lform::presented_module_from_json(arg_json(marg));
    const auto ord = lform::order(mod);
    r.verdict = "ok";
    r.data = json{{"order", lform::to_string(ord.representative())}};
    r.human = lform::to_string(ord.representative());
    return r;
}

Report cmd_present_trivial(const std::string& marg) {
    Report r;
    r.command = "present trivial";
    const auto mod = lform::presented_module_from_json(arg_json(marg));
    const auto verdict = lform::is_trivial_module(mod);
    r.data = json{{"reason", verdict.reason}};
    switch (verdict.status) {
        case lform::TrivialityVerdict::Status::trivial:
            r.verdict = "yes";
            r.human = "trivial (" + verdict.reason + ")";
            break;
        case lform::TrivialityVerdict::Status::nontrivial:
            r.verdict = "no";
            r.exit_code = 1;
            r.human = "nontrivial (" + verdict.reason + ")";
            break;
        case lform::TrivialityVerdict::Status::unknown:
            r.verdict = "unknown";
            r.exit_code = 2;
            r.human = "unknown (" + verdict.reason + ")";
            break;
    }
    return r;
}

Report cmd_torsion_compute(const std::string& arg) {
    Report r;
    r.command = "torsion compute";
    const auto c = lform::based_complex_from_json(arg_json(arg));
    const auto t = lform::torsion(c);
    r.verdict = "ok";
    r.data = json{{"torsion", lform::to_string(t.value)}};
    r.human = lform::to_string(t.value);
    return r;
}

Report cmd_torsion_multiplicativity(const std::string& arg) {
    Report r;
    r.command = "torsion multiplicativity";
    const json j = arg_json(arg);
    for (const char* key : {"sub", "total", "quot", "inclusions", "projections"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    const auto sub = lform::based_complex_from_json(j.at("sub"));
    const auto total = lform::based_complex_from_json(j.at("total"));
    const auto quot = lform::based_complex_from_json(j.at("quot"));
    // degree-indexed lists are written top degree first, like dims
    auto matrices = [&](const json& arr) {
        std::vector<lform::RatFunMatrix> ms;
        for (const auto& m : arr) ms.push_back(lform::ratfun_matrix_from_json(m));
        std::reverse(ms.begin(), ms.end());
        return ms;
    };
    const auto rep = lform::multiplicativity_check(sub, total, quot, matrices(j.at("inclusions")),
                                                   matrices(j.at("projections")));
    r.data = lform::multiplicativity_to_json(rep);
    r.verdict = rep.exact_equal ? "yes" : "no";
    r.exit_code = rep.exact_equal ? 0 : 1;
    r.human = rep.exact_equal
                  ? "multiplicative: tau(C) = tau(C')·tau(C'')·tau(H)"
                  : "discrepancy factor " + lform::to_string(rep.discrepancy);
    return r;
}

Report cmd_surgery_dual(const std::string& arg) {
    Report r;
    r.command = "surgery dual";
    const lform::EquivLinkingMatrix a(lform::ratfun_matrix_from_json(arg_json(arg)));
    const auto d = lform::dual_matrix(a);
    r.verdict = "ok";
    r.data = json{{"dual", lform::ratfun_matrix_to_json(d.matrix())}};
    r.human = r.data["dual"].dump();
    return r;
}

Report cmd_surgery_alexander(const std::string& parg, const std::string& marg) {
    Report r;
    r.command = "surgery alexander";
    const lform::OrderPoly delta(arg_poly(parg));
    const lform::EquivLinkingMatrix a(lform::ratfun_matrix_from_json(arg_json(marg)));
    const auto res = lform::alexander_transform(delta, a);
    r.verdict = "ok";
    r.data = json{{"product", lform::to_string(res.product)}};
    if (res.order) r.data["order"] = lform::to_string(res.order->representative());
    else r.data["note"] = res.note;
    r.human = lform::to_string(res.product);
    return r;
}

Report cmd_surgery_realise(const std::string& marg) {
    Report r;
    r.command = "surgery realise";
    const lform::HermitianForm q(arg_poly_matrix(marg));
    const auto rep = lform::realisation_report(q);
    r.data = lform::realisation_to_json(rep);
    r.verdict = rep.all_passed ? "yes" : "no";
    r.exit_code = rep.all_passed ? 0 : 1;
    r.human = rep.all_passed ? "all checks passed" : "some checks failed";
    return r;
}

Report cmd_surgery_framing(const std::string& arg) {
    Report r;
    r.command = "surgery framing";
    // raw matrices allowed: the point is to detect asymmetric framings
    const bool ok = lform::check_framing_symmetry(lform::ratfun_matrix_from_json(arg_json(arg)));
    r.verdict = ok ? "yes" : "no";
    r.exit_code = ok ? 0 : 1;
    r.human = ok ? "framings symmetric" : "framings not symmetric";
    return r;
}

Report cmd_units_phi(const std::string& pa, const std::string& pb,
                     const std::optional<std::string>& pm) {
    Report r;
    r.command = "units phi";
    const auto a = arg_poly(pa), b = arg_poly(pb);
    if (!a.is_symmetric() || !b.is_symmetric())
        throw std::invalid_argument("units phi: factors must be symmetric");
    const auto bez = lform::bezout_one(a, b);
    if (bez.impossible()) {
        r.verdict = "no";
        r.exit_code = 1;
        r.data = json{{"certificate", bez.certificate}};
        r.human = "no Bézout identity: " + bez.certificate;
        return r;
    }
    if (bez.unknown()) {
        r.verdict = "unknown";
        r.exit_code = 2;
        r.data = json{{"note", bez.certificate}};
        r.human = "Bézout search inconclusive: " + bez.certificate;
        return r;
    }
    const lform::Factorization f{a, b, bez.x, bez.y};
    const lform::LaurentPoly m = pm ? arg_poly(*pm) : lform::LaurentPoly(2) * a * b;
    const auto u = lform::phi(f, m);
    r.verdict = "ok";
    r.data = json{{"phi", lform::to_string(u)},
                  {"modulus", lform::to_string(m)},
                  {"x", lform::to_string(bez.x)},
                  {"y", lform::to_string(bez.y)}};
    r.human = lform::to_string(u) + "  (mod " + lform::to_string(m) + ")";
    return r;
}

std::vector<lform::LaurentPoly> parse_hints(const std::vector<std::string>& hints) {
    std::vector<lform::LaurentPoly> out;
    for (const auto& h : hints) out.push_back(arg_poly(h));
    return out;
}

Report cmd_units_count(const std::string& parg, const std::vector<std::string>& hints) {
    Report r;
    r.command = "units count";
    const auto fl = lform::coprime_symmetric_factorizations(arg_poly(parg), parse_hints(hints));
    r.verdict = "ok";
    json items = json::array();
    for (const auto& f : fl.items)
        items.push_back(json{{"a", lform::to_string(f.a)}, {"b", lform::to_string(f.b)}});
    r.data = json{{"n_P", fl.count()},
                  {"lower_bound_only", fl.lower_bound_only},
                  {"factorizations", items}};
    r.human = std::to_string(fl.count()) + (fl.lower_bound_only ? " (lower bound)" : "");
    return r;
}

Report cmd_units_classes(const std::string& parg, const std::vector<std::string>& hints) {
    Report r;
    r.command = "units classes";
    const auto p = arg_poly(parg);
    const auto parsed_hints = parse_hints(hints);
    const auto fl = lform::coprime_symmetric_factorizations(p, parsed_hints);
    const auto classes = lform::distinct_classes(p, parsed_hints);
    r.verdict = "ok";
    r.data = json{{"n_P", fl.count()}, {"distinct", classes}};
    r.human = "n_P = " + std::to_string(fl.count()) + ", distinct classes = " +
              std::to_string(classes);
    return r;
}

Report cmd_hslice_check(const std::string& farg, const std::string& qnarg, long genus,
                        long bound) {
    Report r;
    r.command = "hslice check";
    const lform::HermitianForm a(arg_poly_matrix(farg));
    if (!a.nondegenerate()) throw std::invalid_argument("hslice: form must be nondegenerate");
    const lform::IntSymForm qn(lform::int_matrix_from_json(arg_json(qnarg)));
    if (genus < 0) throw std::invalid_argument("hslice: genus must be nonnegative");
    if (a.size() != qn.size() + 2 * static_cast<std::size_t>(genus))
        throw std::invalid_argument("hslice: size of A(1) must equal size of Q_N plus 2g");
    const auto a1 = lform::IntSymForm(lform::augment(a));
    const auto target = qn.padded(2 * static_cast<std::size_t>(genus));
    const auto verdict = lform::int_congruent_bounded(a1, target, lform::Int(bound));
    r.data = json{{"congruence", lform::congruence_to_json(verdict)},
                  {"augmented", lform::int_matrix_to_json(a1.matrix())}};
    switch (verdict.kind) {
        case lform::CongruenceVerdict::Kind::congruent:
            r.verdict = "yes";
            r.human = "criterion met: A(1) is congruent to Q_N ⊕ 0^(2g)";
            break;
        case lform::CongruenceVerdict::Kind::not_congruent:
            r.verdict = "no";
            r.exit_code = 1;
            r.human = "criterion failed: obstruction " + verdict.obstruction;
            break;
        case lform::CongruenceVerdict::Kind::inconclusive:
            r.verdict = "unknown";
            r.exit_code = 2;
            r.human = "inconclusive within the search bound";
            break;
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermitian/linking form algebra over Z[t^±1]"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.add_flag("--json", g_json, "machine-readable JSON report on stdout");
    long bound = 3;
    app.add_option("--bound", bound, "search bound for congruence/isometry searches")
        ->capture_default_str();

    app.add_option("--input", g_input_file,
                   "file providing the input of a single-argument subcommand");

    std::string a1, a2, a3;
    std::vector<std::string> hints;
    long deg_bound = 1, coeff_bound = 1, genus = 0;
    int degree_bound = 6;

    std::function<Report()> run;

    // laurent
    auto* laurent = app.add_subcommand("laurent", "ring operations in Z[t^±1]");
    auto* l_eval = laurent->add_subcommand("eval", "evaluate at t = 1");
    l_eval->add_option("poly", a1, "polynomial");
    l_eval->callback([&]() { run = [&]() { return cmd_laurent_eval(pick_input(a1)); }; });
    auto* l_gcd = laurent->add_subcommand("gcd", "greatest common divisor");
    l_gcd->add_option("p", a1)->required();
    l_gcd->add_option("q", a2)->required();
    l_gcd->callback([&]() { run = [&]() { return cmd_laurent_gcd(a1, a2); }; });
    auto* l_bez = laurent->add_subcommand("bezout", "solve a·x + b·y = 1");
    l_bez->add_option("a", a1)->required();
    l_bez->add_option("b", a2)->required();
    l_bez->add_option("--degree-bound", degree_bound, "window slack for the bounded search");
    l_bez->callback([&]() { run = [&]() { return cmd_laurent_bezout(a1, a2, degree_bound); }; });
    auto* l_dot = laurent->add_subcommand("doteq", "equality up to ±t^k");
    l_dot->add_option("p", a1)->required();
    l_dot->add_option("q", a2)->required();
    l_dot->callback([&]() { run = [&]() { return cmd_laurent_doteq(a1, a2); }; });

    // form
    auto* form = app.add_subcommand("form", "Hermitian forms over Z[t^±1]");
    auto* f_check = form->add_subcommand("check", "is the matrix Hermitian?");
    f_check->add_option("matrix", a1);
    f_check->callback([&]() { run = [&]() { return cmd_form_check(pick_input(a1)); }; });
    auto* f_even = form->add_subcommand("even", "is the form even?");
    f_even->add_option("matrix", a1);
    f_even->callback([&]() { run = [&]() { return cmd_form_even(pick_input(a1)); }; });
    auto* f_aug = form->add_subcommand("augment", "evaluate entrywise at t = 1");
    f_aug->add_option("matrix", a1);
    f_aug->callback([&]() { run = [&]() { return cmd_form_augment(pick_input(a1)); }; });
    auto* f_bdry = form->add_subcommand("boundary", "boundary linking form");
    f_bdry->add_option("matrix", a1);
    f_bdry->callback([&]() { run = [&]() { return cmd_form_boundary(pick_input(a1)); }; });
    auto* f_aut = form->add_subcommand("aut", "bounded isometry search");
    f_aut->add_option("matrix", a1);
    f_aut->add_option("--deg-bound", deg_bound, "exponent window for entries")
        ->capture_default_str();
    f_aut->add_option("--coeff-bound", coeff_bound, "coefficient bound for entries")
        ->capture_default_str();
    f_aut->callback([&]() { run = [&]() { return cmd_form_aut(pick_input(a1), deg_bound, coeff_bound); }; });

    // present
    auto* present = app.add_subcommand("present", "finitely presented modules");
    auto* p_order = present->add_subcommand("order", "order (gcd of maximal minors)");
    p_order->add_option("relations", a1);
    p_order->callback([&]() { run = [&]() { return cmd_present_order(pick_input(a1)); }; });
    auto* p_triv = present->add_subcommand("trivial", "is the module zero?");
    p_triv->add_option("relations", a1);
    p_triv->callback([&]() { run = [&]() { return cmd_present_trivial(pick_input(a1)); }; });

    // torsion
    auto* torsion = app.add_subcommand("torsion", "Reidemeister torsion over Q(t)");
    auto* t_comp = torsion->add_subcommand("compute", "torsion of a based complex");
    t_comp->add_option("complex", a1);
    t_comp->callback([&]() { run = [&]() { return cmd_torsion_compute(pick_input(a1)); }; });
    auto* t_mult = torsion->add_subcommand("multiplicativity", "check the product formula");
    t_mult->add_option("sequence", a1);
    t_mult->callback([&]() { run = [&]() { return cmd_torsion_multiplicativity(pick_input(a1)); }; });

    // surgery
    auto* surgery = app.add_subcommand("surgery", "equivariant linking matrix calculus");
    auto* s_dual = surgery->add_subcommand("dual", "linking matrix of the dual link");
    s_dual->add_option("matrix", a1);
    s_dual->callback([&]() { run = [&]() { return cmd_surgery_dual(pick_input(a1)); }; });
    auto* s_alex = surgery->add_subcommand("alexander", "Alexander polynomial after surgery");
    s_alex->add_option("delta", a1)->required();
    s_alex->add_option("matrix", a2)->required();
    s_alex->callback([&]() { run = [&]() { return cmd_surgery_alexander(a1, a2); }; });
    auto* s_real = surgery->add_subcommand("realise", "run the realisation pipeline checks");
    s_real->add_option("matrix", a1);
    s_real->callback([&]() { run = [&]() { return cmd_surgery_realise(pick_input(a1)); }; });
    auto* s_fram = surgery->add_subcommand("framing", "framing symmetry check");
    s_fram->add_option("matrix", a1);
    s_fram->callback([&]() { run = [&]() { return cmd_surgery_framing(pick_input(a1)); }; });

    // units
    auto* units = app.add_subcommand("units", "unitary units of Z[t^±1]/(m)");
    auto* u_phi = units->add_subcommand("phi", "the unit -a·x + b·y of a factorization");
    u_phi->add_option("a", a1)->required();
    u_phi->add_option("b", a2)->required();
    u_phi->add_option("m", a3, "modulus (default 2ab)");
    u_phi->callback([&]() {
        run = [&]() {
            return cmd_units_phi(a1, a2, a3.empty() ? std::nullopt : std::optional(a3));
        };
    });
    auto* u_count = units->add_subcommand("count", "number of coprime symmetric factorizations");
    u_count->add_option("P", a1);
    u_count->add_option("--factor", hints, "symmetric factor hint (repeatable)");
    u_count->callback([&]() { run = [&]() { return cmd_units_count(pick_input(a1), hints); }; });
    auto* u_cls = units->add_subcommand("classes", "distinct unit classes mod U(Z[t^±1])");
    u_cls->add_option("P", a1);
    u_cls->add_option("--factor", hints, "symmetric factor hint (repeatable)");
    u_cls->callback([&]() { run = [&]() { return cmd_units_classes(pick_input(a1), hints); }; });

    // hslice
    auto* hslice = app.add_subcommand("hslice", "the A(1) congruence criterion");
    auto* h_check = hslice->add_subcommand("check", "A(1) ≅ Q_N ⊕ 0^(2g)?");
    h_check->add_option("--form", a1, "Hermitian matrix A(t)")->required();
    h_check->add_option("--qn", a2, "integer intersection form Q_N")->required();
    h_check->add_option("-g,--genus", genus, "genus g")->capture_default_str();
    h_check->callback([&]() { run = [&]() { return cmd_hslice_check(a1, a2, genus, bound); }; });

    // let --json / --bound appear anywhere on the command line
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (auto* sc : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sc->fallthrough();
            enable_fallthrough(sc);
        }
    };
    enable_fallthrough(&app);

    std::string command_line;
    for (int i = 1; i < argc; ++i) command_line += std::string(i > 1 ? " " : "") + argv[i];

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 3;
    }
    if (!run) return emit_error(command_line, "unknown subcommand");
    try {
        return emit(run());
    } catch (const lform::ParseError& e) {
        return emit_error(command_line, std::string("parse error ") + e.what());
    } catch (const json::exception& e) {
        return emit_error(command_line, std::string("JSON error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(command_line, e.what());
    } catch (const std::domain_error& e) {
        return emit_error(command_line, e.what());
    } catch (const std::exception& e) {
        return emit_error(command_line, std::string("internal error: ") + e.what());
    }
}
