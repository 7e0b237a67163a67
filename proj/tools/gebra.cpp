// gebra: command-line front end for the exact Grassmann/Clifford kernel.
//
//   gebra eval  --expr "gco(e1^e2)" [--dim N] [--context FILE] [--numeric "b11=1,..."] [--json]
//   gebra repro {antipodes|bw-bs|rmatrix|qybe|yb-matrix|qt-axioms|mm-recursion} [--json]
//   gebra solve {antipode|rmatrix} [--product wedge|clifford] [--coproduct grassmann|clifford]
//
// Exit status: 0 on success, 1 when a repro check fails, 2 on usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gebra/blade.hpp"
#include "gebra/clifford.hpp"
#include "gebra/errors.hpp"
#include "gebra/eval.hpp"
#include "gebra/hopf.hpp"
#include "gebra/textio.hpp"

namespace {

using nlohmann::json;
using namespace gebra;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string kind_str(SolveKind k) {
    switch (k) {
        case SolveKind::Unique: return "unique";
        case SolveKind::Parametric: return "parametric";
        default: return "inconsistent";
    }
}

std::string sym_list(const std::set<Sym>& syms) {
    std::string out;
    for (const Sym& s : syms) {
        if (!out.empty()) out += ", ";
        out += s.str();
    }
    return out;
}

json scalar_json(std::uint32_t dim, const RatFunc& c) {
    return json{{"kind", "scalar"}, {"dim", dim}, {"value", c.str()}};
}

json mv_json(const Multivector& u) {
    json terms = json::array();
    for (const auto& [mask, c] : u.terms())
        terms.push_back(json{{"blade", blade_name(mask)}, {"coeff", c.str()}});
    return json{{"kind", "multivector"}, {"dim", u.dim()}, {"terms", terms}};
}

json tensor_json(const TensorPoly& t) {
    json terms = json::array();
    for (const auto& [word, c] : t.terms()) {
        json w = json::array();
        for (std::uint64_t mask : word) w.push_back(blade_name(mask));
        terms.push_back(json{{"word", w}, {"coeff", c.str()}});
    }
    return json{{"kind", "tensor"}, {"dim", t.dim()}, {"rank", t.rank()}, {"terms", terms}};
}

json matrix_json(std::uint32_t dim, const EndoMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"kind", "matrix"}, {"dim", dim}, {"size", m.size()}, {"entries", rows}};
}

json value_json(std::uint32_t dim, const Value& v) {
    if (const auto* s = std::get_if<RatFunc>(&v)) return scalar_json(dim, *s);
    if (const auto* u = std::get_if<Multivector>(&v)) return mv_json(*u);
    return tensor_json(std::get<TensorPoly>(v));
}

AlgebraContext load_context(const std::string& file, std::uint32_t dim, const SubstMap& bindings) {
    AlgebraContext ctx =
        file.empty() ? AlgebraContext::symbolic(dim) : read_context_file(file, dim);
    return bindings.empty() ? ctx : ctx.substituted(bindings);
}

// ------------------------------------------------------------------ repro --

// Collects what a repro pipeline computed: display sections, pass/fail checks
// against the golden corpus, and a JSON mirror of the results.
struct Repro {
    std::string command;
    std::string golden_dir;
    bool json_out = false;

    struct Check {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<std::pair<std::string, std::string>> sections;
    std::vector<Check> checks;
    json results = json::object();

    std::string golden_path(const std::string& name) const { return golden_dir + "/" + name; }

    void show(const std::string& label, const std::string& body) {
        sections.emplace_back(label, body);
    }

    void expect(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, ok ? "" : detail});
    }

    void check_matrix(const std::string& name, const EndoMatrix& got,
                      const std::string& golden_file) {
        const EndoMatrix want = read_matrix_file(golden_path(golden_file));
        if (const auto diff = first_matrix_diff(got, want)) {
            expect(name, false,
                   "entry (" + std::to_string(diff->row) + ", " + std::to_string(diff->col) +
                       "): got " + diff->got + ", want " + diff->want);
        } else {
            expect(name, true);
        }
    }

    void check_fact(const std::string& name, const std::map<std::string, std::string>& kv,
                    const std::string& key, const std::string& got) {
        const auto it = kv.find(key);
        if (it == kv.end())
            expect(name, false, "golden key '" + key + "' missing");
        else
            expect(name, it->second == got, "got " + got + ", want " + it->second);
    }

    int finish() const {
        bool all_ok = true;
        for (const Check& c : checks) all_ok = all_ok && c.ok;
        if (json_out) {
            json doc{{"command", command}, {"dim", 2}, {"ok", all_ok}, {"results", results}};
            json list = json::array();
            for (const Check& c : checks)
                list.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            doc["assertions"] = list;
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& [label, body] : sections) {
                if (!label.empty()) std::cout << label << ":\n";
                std::cout << body << "\n\n";
            }
            std::size_t failed = 0;
            for (const Check& c : checks) {
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
                if (!c.ok && !c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
                if (!c.ok) ++failed;
            }
            if (failed == 0)
                std::cout << "PASS (" << checks.size() << " checks)\n";
            else
                std::cout << "FAIL (" << failed << " of " << checks.size() << " checks)\n";
        }
        return all_ok ? 0 : 1;
    }
};

void run_antipodes(Repro& r) {
    const AlgebraContext ctx = AlgebraContext::symbolic(2);

    const AntipodeSolution gr = solve_antipode(ProductKind::Wedge, CoproductKind::Grassmann, ctx);
    r.show("antipode, undeformed product and coproduct", gr.matrix.str());
    r.results["s_gr"] = matrix_json(2, gr.matrix);
    r.expect("undeformed solve is unique", gr.kind == SolveKind::Unique,
             "kind: " + kind_str(gr.kind));
    r.expect("undeformed solve inverts on both sides", gr.right_sided);
    r.expect("undeformed antipode equals the main involution", gr.matrix == gantipode_matrix(2));
    r.check_matrix("undeformed antipode matches golden", gr.matrix, "s_gr.txt");

    const AntipodeSolution cl =
        solve_antipode(ProductKind::Clifford, CoproductKind::Grassmann, ctx);
    r.show("antipode, deformed product with undeformed coproduct", cl.matrix.str());
    r.results["s_cl"] = matrix_json(2, cl.matrix);
    r.expect("product-deformed solve is unique", cl.kind == SolveKind::Unique,
             "kind: " + kind_str(cl.kind));
    r.expect("product-deformed solve inverts on both sides", cl.right_sided);
    r.check_matrix("product-deformed antipode matches golden", cl.matrix, "s_cl.txt");

    const AntipodeSolution bc = solve_antipode(ProductKind::Clifford, CoproductKind::Clifford, ctx);
    const RatFunc n = antipode_scale(ctx);
    const EndoMatrix scaled = bc.matrix.scaled(n);
    r.show("clearing factor det(1 - B*BI)", n.str());
    r.show("scaled antipode, fully deformed convolution", scaled.str());
    r.results["scale"] = scalar_json(2, n);
    r.results["n_s_bc"] = matrix_json(2, scaled);
    r.expect("fully deformed solve is unique", bc.kind == SolveKind::Unique,
             "kind: " + kind_str(bc.kind));
    r.expect("fully deformed solve inverts on both sides", bc.right_sided);
    r.check_matrix("scaled antipode matches golden", scaled, "s_bc.txt");
}

void run_bw_bs(Repro& r) {
    const BilinearForm b = BilinearForm::symbolic("b", 2);
    const EndoMatrix bw = bw_matrix(b);
    const EndoMatrix bs = bs_matrix(b);
    r.show("scalar-part pairing of the deformed product", bw.str());
    r.show("same pairing with the antipode on the second slot", bs.str());
    r.results["bw"] = matrix_json(2, bw);
    r.results["bs"] = matrix_json(2, bs);
    r.expect("antipoded pairing factors through the plain one",
             bs == bw * gantipode_matrix(2));
    r.check_matrix("plain pairing matches golden", bw, "bw.txt");
    r.check_matrix("antipoded pairing matches golden", bs, "bs.txt");
}

void run_rmatrix(Repro& r) {
    const AlgebraContext ctx = AlgebraContext::symbolic(2);
    const RMatrixSolution sol = solve_rmatrix(ctx);
    r.show("solved R-matrix coefficients over basis pairs", sol.matrix.str());
    r.results["rmatrix"] = matrix_json(2, sol.matrix);
    r.expect("solve is unique", sol.kind == SolveKind::Unique, "kind: " + kind_str(sol.kind));
    r.expect("residual vanishes identically", sol.residual_zero);
    r.check_matrix("R-matrix matches golden", sol.matrix, "rmatrix.txt");
}

void run_qybe(Repro& r) {
    const BilinearForm b = BilinearForm::symbolic("b", 2);
    const TensorPoly t = tensor(
        {general_element(2, "x"), general_element(2, "y"), general_element(2, "z")});

    const bool graded = gswitch(gswitch(gswitch(t, 1), 2), 1) ==
                        gswitch(gswitch(gswitch(t, 2), 1), 2);
    const bool braided = bsw(bsw(bsw(t, 1, b), 2, b), 1, b) ==
                         bsw(bsw(bsw(t, 2, b), 1, b), 2, b);

    r.show("", "gswitch braid: " + bool_str(graded) + "; Bsw braid: " + bool_str(braided));
    r.results["gswitch_braid"] = graded;
    r.results["bsw_braid"] = braided;

    const auto kv = read_kv_file(r.golden_path("qybe.txt"));
    r.check_fact("graded swap satisfies the braid relation", kv, "gswitch_braid",
                 bool_str(graded));
    r.check_fact("form-driven braiding satisfies the braid relation", kv, "bsw_braid",
                 bool_str(braided));
}

void run_yb_matrix(Repro& r) {
    const BilinearForm f = BilinearForm::symbolic("R", 2);
    const EndoMatrix m = yb_matrix(f);
    const RatFunc det = yb_det(f);
    const TriangularityReport generic = yb_triangular(f);
    const SubstMap symm{{Sym("R", 2, 1), RatFunc(Sym("R", 1, 2))}};
    const TriangularityReport symmetric = yb_triangular(f.substituted(symm));

    r.show("matrix of the form-driven braiding on the pair basis", m.str());
    r.show("determinant", det.str());
    r.show("squares to identity for the generic form", bool_str(generic.triangular));
    if (!generic.triangular)
        r.show("witness entry of square minus identity",
               "(" + std::to_string(generic.row) + ", " + std::to_string(generic.col) +
                   ") = " + generic.witness.str());
    r.show("squares to identity for the symmetric form", bool_str(symmetric.triangular));

    r.results["yb_matrix"] = matrix_json(2, m);
    r.results["det"] = det.str();
    r.results["triangular_generic"] = generic.triangular;
    r.results["triangular_symmetric"] = symmetric.triangular;

    const auto kv = read_kv_file(r.golden_path("yb.txt"));
    r.check_fact("determinant matches golden", kv, "det", det.str());
    r.check_fact("symmetric form gives a triangular braiding", kv, "triangular_symmetric",
                 bool_str(symmetric.triangular));
    r.check_fact("generic form does not", kv, "triangular_generic", bool_str(generic.triangular));
    r.expect("non-triangularity witness is nonzero", !generic.witness.is_zero());
}

void run_qt_axioms(Repro& r) {
    const QtMatrices qt = qt_matrices(BilinearForm::symbolic("R", 2));
    r.show("pairing with no antipode", qt.r.str());
    r.show("antipode on the second slot", qt.rs.str());
    r.show("antipode twice on the second slot", qt.rss.str());
    r.show("antipode on the first slot", qt.sr.str());
    r.results["r"] = matrix_json(2, qt.r);
    r.results["rs"] = matrix_json(2, qt.rs);
    r.results["rss"] = matrix_json(2, qt.rss);
    r.results["sr"] = matrix_json(2, qt.sr);
    r.check_matrix("plain pairing matches golden", qt.r, "qt_r.txt");
    r.check_matrix("second-slot antipode pairing matches golden", qt.rs, "qt_rs.txt");
    r.check_matrix("double-antipode pairing matches golden", qt.rss, "qt_rss.txt");
    r.check_matrix("first-slot antipode pairing matches golden", qt.sr, "qt_sr.txt");
    r.expect("double antipode restores the plain pairing", qt.rss_equals_r);
    r.expect("the antipode moves across the pairing", qt.rs_equals_sr);
}

void run_mm_recursion(Repro& r) {
    const AlgebraContext ctx = AlgebraContext::symbolic(2);
    const ProductFn wedge_fn = [](const Multivector& u, const Multivector& v) {
        return wedge(u, v);
    };
    const CoproductFn split = [](const Multivector& u) { return gco(u); };

    const EndoMatrix rec_gr = milnor_moore_antipode(wedge_fn, split, 2);
    const EndoMatrix rec_cl = milnor_moore_antipode(clifford_product(ctx.product_form()), split, 2);

    bool grounded = true;
    std::string thrown;
    try {
        const CoproductFn deformed = [&ctx](const Multivector& u) { return cco(u, ctx); };
        milnor_moore_antipode(clifford_product(ctx.product_form()), deformed, 2);
    } catch (const RecursionNotGrounded& e) {
        grounded = false;
        thrown = e.what();
    }

    const AntipodeSolution cl =
        solve_antipode(ProductKind::Clifford, CoproductKind::Grassmann, ctx);
    const AntipodeSolution bc = solve_antipode(ProductKind::Clifford, CoproductKind::Clifford, ctx);
    const EndoMatrix scaled = bc.matrix.scaled(antipode_scale(ctx));

    const SubstMap symm{{Sym("b", 2, 1), RatFunc(Sym("b", 1, 2))},
                        {Sym("p", 2, 1), RatFunc(Sym("p", 1, 2))}};
    const bool symmetric_agreement = scaled.substituted(symm) == rec_cl.substituted(symm);
    const EndoMatrix gap = scaled - rec_cl;
    const bool generic_difference = !gap.is_zero();

    r.show("recursive antipode, undeformed product", rec_gr.str());
    r.show("recursive antipode, deformed product", rec_cl.str());
    if (!grounded) r.show("recursion under the deformed coproduct", thrown);
    r.show("scaled solved antipode minus recursive one", gap.str());

    const bool gr_matches = rec_gr == gantipode_matrix(2);
    const bool cl_matches = rec_cl == cl.matrix;
    r.results["rec_gr"] = matrix_json(2, rec_gr);
    r.results["rec_cl"] = matrix_json(2, rec_cl);
    r.results["grassmann_matches_involution"] = gr_matches;
    r.results["clifford_matches_solve"] = cl_matches;
    r.results["deformed_coproduct_grounded"] = grounded;
    r.results["symmetric_agreement"] = symmetric_agreement;
    r.results["generic_difference"] = generic_difference;

    const auto kv = read_kv_file(r.golden_path("mm.txt"));
    r.check_fact("undeformed recursion equals the main involution", kv,
                 "grassmann_matches_involution", bool_str(gr_matches));
    r.check_fact("deformed-product recursion equals the solved antipode", kv,
                 "clifford_matches_solve", bool_str(cl_matches));
    r.check_fact("recursion under the deformed coproduct stays grounded", kv,
                 "deformed_coproduct_grounded", bool_str(grounded));
    r.check_fact("recursion and scaled solution agree for symmetric forms", kv,
                 "symmetric_agreement", bool_str(symmetric_agreement));
    r.check_fact("recursion and scaled solution differ generically", kv, "generic_difference",
                 bool_str(generic_difference));
    r.check_matrix("undeformed recursion matches golden", rec_gr, "s_gr.txt");
    r.check_matrix("deformed-product recursion matches golden", rec_cl, "s_cl.txt");
}

// ---------------------------------------------------------------- eval etc --

int run_eval(const std::string& expr, std::uint32_t dim, const std::string& context_file,
             const std::string& numeric, bool json_out) {
    const SubstMap bindings = numeric.empty() ? SubstMap{} : parse_bindings(numeric);
    const AlgebraContext ctx = load_context(context_file, dim, bindings);
    Value v = evaluate_str(expr, ctx);
    if (!bindings.empty()) v = value_subst(v, bindings);
    if (json_out)
        std::cout << value_json(ctx.dim(), v).dump(2) << "\n";
    else
        std::cout << value_dsl(v) << "\n";
    return 0;
}

int run_solve(const std::string& what, const std::string& product, const std::string& coproduct,
              std::uint32_t dim, const std::string& context_file, const std::string& numeric,
              bool json_out) {
    const SubstMap bindings = numeric.empty() ? SubstMap{} : parse_bindings(numeric);
    const AlgebraContext ctx = load_context(context_file, dim, bindings);

    if (what == "rmatrix") {
        const RMatrixSolution sol = solve_rmatrix(ctx);
        if (json_out) {
            json doc{{"command", "solve rmatrix"},
                     {"dim", ctx.dim()},
                     {"kind", kind_str(sol.kind)},
                     {"residual_zero", sol.residual_zero}};
            json frees = json::array();
            for (const Sym& s : sol.free_unknowns) frees.push_back(s.str());
            doc["free_unknowns"] = frees;
            if (sol.kind != SolveKind::Inconsistent)
                doc["matrix"] = matrix_json(ctx.dim(), sol.matrix);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "kind: " << kind_str(sol.kind) << "\n";
            std::cout << "residual zero: " << bool_str(sol.residual_zero) << "\n";
            if (!sol.free_unknowns.empty())
                std::cout << "free unknowns: " << sym_list(sol.free_unknowns) << "\n";
            if (sol.kind != SolveKind::Inconsistent)
                std::cout << "coefficients over basis pairs:\n" << sol.matrix.str() << "\n";
        }
        return 0;
    }

    const ProductKind pk = product == "wedge" ? ProductKind::Wedge : ProductKind::Clifford;
    const CoproductKind ck =
        coproduct == "grassmann" ? CoproductKind::Grassmann : CoproductKind::Clifford;
    const AntipodeSolution sol = solve_antipode(pk, ck, ctx);
    const bool fully_deformed =
        pk == ProductKind::Clifford && ck == CoproductKind::Clifford;

    if (json_out) {
        json doc{{"command", "solve antipode"},
                 {"dim", ctx.dim()},
                 {"product", product},
                 {"coproduct", coproduct},
                 {"kind", kind_str(sol.kind)}};
        json frees = json::array();
        for (const Sym& s : sol.free_unknowns) frees.push_back(s.str());
        doc["free_unknowns"] = frees;
        if (sol.kind != SolveKind::Inconsistent) {
            doc["right_sided"] = sol.right_sided;
            doc["matrix"] = matrix_json(ctx.dim(), sol.matrix);
            if (fully_deformed && sol.kind == SolveKind::Unique) {
                const RatFunc n = antipode_scale(ctx);
                doc["scale"] = n.str();
                doc["scaled_matrix"] = matrix_json(ctx.dim(), sol.matrix.scaled(n));
            }
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "kind: " << kind_str(sol.kind) << "\n";
        if (sol.kind != SolveKind::Inconsistent) {
            std::cout << "inverts on both sides: " << bool_str(sol.right_sided) << "\n";
            if (!sol.free_unknowns.empty())
                std::cout << "free unknowns: " << sym_list(sol.free_unknowns) << "\n";
            std::cout << "matrix:\n" << sol.matrix.str() << "\n";
            if (fully_deformed && sol.kind == SolveKind::Unique) {
                const RatFunc n = antipode_scale(ctx);
                std::cout << "clearing factor det(1 - B*BI): " << n.str() << "\n";
                std::cout << "scaled matrix:\n" << sol.matrix.scaled(n).str() << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grassmann/Clifford algebra calculator"};
    app.require_subcommand(1);

    std::string e_expr, e_context, e_numeric;
    std::uint32_t e_dim = 2;
    bool e_json = false;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("--expr", e_expr, "expression to evaluate")->required();
    eval_cmd->add_option("--dim", e_dim, "number of generators")->check(CLI::Range(1u, 64u));
    eval_cmd->add_option("--context", e_context, "context file fixing the two forms");
    eval_cmd->add_option("--numeric", e_numeric, "bindings sym=value,... substituted throughout");
    eval_cmd->add_flag("--json", e_json, "emit JSON instead of text");

    std::string r_name, r_golden = GEBRA_DEFAULT_GOLDEN_DIR;
    std::uint32_t r_dim = 2;
    bool r_json = false;
    CLI::App* repro_cmd =
        app.add_subcommand("repro", "recompute a pinned pipeline and compare against goldens");
    repro_cmd->add_option("name", r_name, "pipeline name")
        ->required()
        ->check(CLI::IsMember({"antipodes", "bw-bs", "rmatrix", "qybe", "yb-matrix", "qt-axioms",
                               "mm-recursion"}));
    repro_cmd->add_option("--dim", r_dim, "number of generators (pipelines are pinned to 2)");
    repro_cmd->add_option("--golden-dir", r_golden, "directory holding the golden files");
    repro_cmd->add_flag("--json", r_json, "emit JSON instead of text");

    std::string s_what, s_product = "clifford", s_coproduct = "clifford", s_context, s_numeric;
    std::uint32_t s_dim = 2;
    bool s_json = false;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a convolution equation symbolically");
    solve_cmd->add_option("what", s_what, "antipode or rmatrix")
        ->required()
        ->check(CLI::IsMember({"antipode", "rmatrix"}));
    solve_cmd->add_option("--product", s_product, "product to convolve with")
        ->check(CLI::IsMember({"wedge", "clifford"}));
    solve_cmd->add_option("--coproduct", s_coproduct, "coproduct to convolve with")
        ->check(CLI::IsMember({"grassmann", "clifford"}));
    solve_cmd->add_option("--dim", s_dim, "number of generators")->check(CLI::Range(1u, 64u));
    solve_cmd->add_option("--context", s_context, "context file fixing the two forms");
    solve_cmd->add_option("--numeric", s_numeric, "bindings sym=value,... substituted throughout");
    solve_cmd->add_flag("--json", s_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(e_expr, e_dim, e_context, e_numeric, e_json);
        if (solve_cmd->parsed())
            return run_solve(s_what, s_product, s_coproduct, s_dim, s_context, s_numeric, s_json);

        if (r_dim != 2) {
            std::cerr << "error: repro pipelines are pinned to --dim 2\n";
            return 2;
        }
        Repro r;
        r.command = "repro " + r_name;
        r.golden_dir = r_golden;
        r.json_out = r_json;
        if (r_name == "antipodes") run_antipodes(r);
        else if (r_name == "bw-bs") run_bw_bs(r);
        else if (r_name == "rmatrix") run_rmatrix(r);
        else if (r_name == "qybe") run_qybe(r);
        else if (r_name == "yb-matrix") run_yb_matrix(r);
        else if (r_name == "qt-axioms") run_qt_axioms(r);
        else run_mm_recursion(r);
        return r.finish();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
