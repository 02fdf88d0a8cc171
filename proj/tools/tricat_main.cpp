// Batch front end: load instances and diagrams from files, run the
// constructions and verification suites, emit JSON reports and DOT.
//
// Exit status: 0 all checks passed, 1 some check failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tricat/dot.hpp"
#include "tricat/json_io.hpp"
#include "tricat/op.hpp"

using namespace tricat;

namespace {

struct Options {
    std::string instance = "vect";
    std::string field = "Q";
    std::uint64_t seed = 1;
    int samples = 200;
    int max_dim = 6;
    int max_length = 4;
    int max_deg_dim = 3;
    std::string subcat = "even_dim";
    std::string generators;  // file with a JSON array of morphisms
    std::string out;
    std::string dot;
};

struct Instances {
    std::shared_ptr<VectInstance> vect;
    std::shared_ptr<ChainInstance> chain;
    std::shared_ptr<FrobeniusInstance> frob;
    std::shared_ptr<Instance> active;  // possibly an op-wrapper
    std::string selector;
};

Instances make_instances(const Options& o) {
    Instances r;
    Field f = Field::parse(o.field);
    std::string sel = o.instance;
    bool wrap_op = false;
    if (sel.rfind("op-of:", 0) == 0) {
        wrap_op = true;
        sel = sel.substr(6);
    }
    if (sel == "vect") {
        r.vect = std::make_shared<VectInstance>(f);
        r.active = r.vect;
    } else if (sel == "chain") {
        r.chain = std::make_shared<ChainInstance>(f);
        r.active = r.chain;
    } else if (sel == "frobenius") {
        r.frob = std::make_shared<FrobeniusInstance>(f);
        r.active = r.frob;
    } else {
        throw ParseError("unknown instance: " + o.instance);
    }
    if (wrap_op) r.active = op_instance(r.active);
    r.selector = o.instance;
    return r;
}

SampleBudget budget_of(const Options& o) {
    SampleBudget b;
    b.max_dim = o.max_dim;
    b.max_length = o.max_length;
    b.max_deg_dim = o.max_deg_dim;
    return b;
}

json load_json(const std::string& path);

SubcategoryPredicate subcat_of(const Options& o, const Instances& ii) {
    const Instance& inst = *ii.active;
    if (o.subcat == "even_dim") return even_dim();
    if (o.subcat == "zero_only") return zero_only(inst);
    if (o.subcat == "all") return all_objects();
    if (o.subcat == "acyclic") return acyclic_complexes();
    if (o.subcat == "generated_by_cones") {
        if (!ii.vect)
            throw ParseError("generated_by_cones generator files need --instance vect");
        if (o.generators.empty())
            throw ParseError("generated_by_cones needs --generators <file>");
        std::vector<Mor> ws;
        for (const auto& j : load_json(o.generators))
            ws.push_back(ii.vect->mor(matrix_from_json(j)));
        return d_from_morphism_class(inst, ws);
    }
    throw ParseError("unknown subcategory kind: " + o.subcat);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Mor load_morphism(const Instances& ii, const std::string& path) {
    json j = load_json(path);
    if (ii.vect) return ii.vect->mor(matrix_from_json(j));
    if (ii.chain) return chain_map_from_json(*ii.chain, j);
    throw ParseError("morphism files are supported for the vect and chain instances");
}

int emit(const Options& o, json report, bool pass) {
    report["schema"] = "tricat-report/1";
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out);
        out << text;
    }
    return pass ? 0 : 1;
}

void emit_dot(const Options& o, const std::string& text) {
    if (o.dot.empty()) return;
    std::ofstream out(o.dot);
    out << text;
}

json header(const Options& o, const std::string& command, const Instances& ii) {
    return json{{"command", command},
                {"instance", ii.active->name()},
                {"selector", ii.selector},
                {"seed", o.seed},
                {"samples", o.samples}};
}

int cmd_verify(const Options& o) {
    Instances ii = make_instances(o);
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.samples = o.samples;
    vo.budget = budget_of(o);
    VerifyReport rep = verify_axioms(*ii.active, vo);
    json out = header(o, "verify-axioms", ii);
    out["checks"] = check_results_to_json(rep.checks);
    out["pass"] = rep.pass();
    return emit(o, out, rep.pass());
}

int cmd_cone(const Options& o, const std::string& f_path) {
    Instances ii = make_instances(o);
    Mor f = load_morphism(ii, f_path);
    CandidateTriangle t = ii.active->cone(f);
    json out = header(o, "cone", ii);
    out["objects"] = json{{"x", t.x.name()}, {"y", t.y.name()}, {"cone", t.z.name()}};
    auto ok = ii.active->is_triangle(t);
    out["is_triangle"] = !ok.has_value() || *ok;
    out["vanishing"] = check_vanishing(*ii.active, t).pass();
    if (ii.vect) {
        out["cone_dim"] = VectInstance::dim(t.z);
        out["triangle"] = vect_triangle_to_json(t);
    }
    bool pass = out["is_triangle"].get<bool>() && out["vanishing"].get<bool>();
    out["pass"] = pass;
    return emit(o, out, pass);
}

int cmd_octahedron(const Options& o, const std::string& f_path, const std::string& g_path) {
    Instances ii = make_instances(o);
    Mor f = load_morphism(ii, f_path);
    Mor g = load_morphism(ii, g_path);
    OctahedronWitness w = ii.active->octahedron(f, g);
    std::string why;
    bool ok = validate_octahedron(*ii.active, w, &why);
    json out = header(o, "octahedron", ii);
    out["cones"] = json{{"f", w.t_f.z.name()}, {"gf", w.t_gf.z.name()}, {"g", w.t_g.z.name()}};
    out["valid"] = ok;
    if (!ok) out["reason"] = why;
    out["pass"] = ok;
    emit_dot(o, dot_braid(*ii.active, braid(*ii.active, f, g)));
    return emit(o, out, ok);
}

int cmd_fill(const Options& o, const std::string& t1p, const std::string& t2p,
             const std::string& jp, const std::string& kp) {
    Instances ii = make_instances(o);
    if (!ii.vect) throw ParseError("fill: triangle files are supported for the vect instance");
    CandidateTriangle t1 = vect_triangle_from_json(*ii.vect, load_json(t1p));
    CandidateTriangle t2 = vect_triangle_from_json(*ii.vect, load_json(t2p));
    Mor jm = ii.vect->mor(matrix_from_json(load_json(jp)));
    Mor km = ii.vect->mor(matrix_from_json(load_json(kp)));
    Mor m = filling_morphism(*ii.vect, t1, t2, jm, km);
    std::string why;
    bool ok = validate_triangle_morphism(*ii.vect, TriangleMorphism{t1, t2, jm, km, m}, &why);
    json out = header(o, "fill", ii);
    out["filling"] = matrix_to_json(VectInstance::matrix(m));
    out["valid"] = ok;
    if (!ok) out["reason"] = why;
    out["pass"] = ok;
    return emit(o, out, ok);
}

int cmd_puppe(const Options& o, const std::string& tp, int left, int right) {
    Instances ii = make_instances(o);
    if (!ii.vect) throw ParseError("puppe: triangle files are supported for the vect instance");
    CandidateTriangle t = vect_triangle_from_json(*ii.vect, load_json(tp));
    PuppeSequence p = puppe(*ii.vect, t, left, right);
    std::string why;
    bool ok = puppe_composites_vanish(*ii.vect, p, &why);
    json out = header(o, "puppe", ii);
    out["entries"] = static_cast<int>(p.morphisms.size());
    json mors = json::array();
    for (const Mor& m : p.morphisms) mors.push_back(matrix_to_json(VectInstance::matrix(m)));
    out["morphisms"] = mors;
    out["composites_vanish"] = ok;
    if (!ok) out["reason"] = why;
    out["pass"] = ok;
    return emit(o, out, ok);
}

int cmd_braid(const Options& o, const std::string& f_path, const std::string& g_path) {
    Instances ii = make_instances(o);
    Mor f = load_morphism(ii, f_path);
    Mor g = load_morphism(ii, g_path);
    BraidDiagram b = braid(*ii.active, f, g);
    std::string why;
    bool ok = braid_commutes(*ii.active, b, &why);
    json out = header(o, "braid", ii);
    out["commutes"] = ok;
    if (!ok) out["reason"] = why;
    out["pass"] = ok;
    emit_dot(o, dot_braid(*ii.active, b));
    return emit(o, out, ok);
}

int cmd_grid(const Options& o, const std::string& fp, const std::string& jp,
             const std::string& kp, const std::string& hp) {
    Instances ii = make_instances(o);
    Mor top = load_morphism(ii, fp);
    Mor left = load_morphism(ii, jp);
    Mor right = load_morphism(ii, kp);
    Mor bottom = load_morphism(ii, hp);
    GridCompletion gc = three_by_three(*ii.active, top, left, right, bottom);
    GridReport rep = validate_grid(*ii.active, gc);
    json out = header(o, "three-by-three", ii);
    out["squares_checked"] = rep.squares_checked;
    out["anticommuting_corner"] = rep.anticommutes;
    out["failed"] = rep.failed;
    out["pass"] = rep.pass();
    emit_dot(o, dot_grid(*ii.active, gc));
    return emit(o, out, rep.pass());
}

int cmd_triple(const Options& o, const std::string& fp, const std::string& gp,
               const std::string& hp) {
    Instances ii = make_instances(o);
    Mor f = load_morphism(ii, fp);
    Mor g = load_morphism(ii, gp);
    Mor h = load_morphism(ii, hp);
    TripleConeData td = triple_composition(*ii.active, f, g, h);
    auto ok = ii.active->is_triangle(td.triangle);
    bool factor = ii.active->mor_equal(td.triangle.f,
                                       ii.active->compose(td.beta, td.alpha));
    json out = header(o, "triple", ii);
    out["objects"] = json{{"cone_f", td.triangle.x.name()},
                          {"cone_hgf", td.triangle.y.name()},
                          {"cone_hg", td.triangle.z.name()}};
    out["is_triangle"] = !ok.has_value() || *ok;
    out["middle_factors"] = factor;
    bool pass = out["is_triangle"].get<bool>() && factor;
    out["pass"] = pass;
    return emit(o, out, pass);
}

int cmd_localize(const Options& o, const std::string& check) {
    Instances ii = make_instances(o);
    const Instance& inst = *ii.active;
    SubcategoryPredicate d = subcat_of(o, ii);
    std::mt19937_64 rng(o.seed);
    SampleBudget b = budget_of(o);
    json out = header(o, "localize", ii);
    out["subcat"] = d.name;
    out["check"] = check;
    bool pass = true;
    if (check == "thick") {
        ThickReport rep = is_thick(inst, d, rng, o.samples, b);
        out["suspension_closed"] = rep.suspension_closed;
        out["cone_closed"] = rep.cone_closed;
        out["thick"] = rep.thick;
        if (!rep.witness.empty()) out["witness"] = rep.witness;
        pass = rep.pass();
    } else if (check == "trivial") {
        // every sampled object becomes zero in the quotient
        int zero = 0;
        for (int i = 0; i < o.samples; ++i)
            if (kernel_of_loc(inst, inst.random_object(rng, b), d)) ++zero;
        out["sampled"] = o.samples;
        out["zero_in_quotient"] = zero;
        out["all_objects_zero"] = zero == o.samples;
        pass = zero == o.samples;
    } else if (check == "two-of-three") {
        int bad = 0;
        for (int i = 0; i < o.samples; ++i) {
            ObjectRef x = inst.random_object(rng, b), y = inst.random_object(rng, b),
                      z = inst.random_object(rng, b);
            auto rep = two_of_three(inst, inst.random_mor(rng, x, y),
                                    inst.random_mor(rng, y, z), d);
            if (!rep.pass()) ++bad;
        }
        out["failures"] = bad;
        pass = bad == 0;
    } else if (check == "kernel") {
        int bad = 0;
        for (int i = 0; i < o.samples; ++i) {
            ObjectRef x = inst.random_object(rng, b);
            if (kernel_of_loc(inst, x, d) != thick_closure_member(inst, x, d)) ++bad;
        }
        out["mismatches"] = bad;
        pass = bad == 0;
    } else if (check == "suite") {
        LocOptions lo;
        lo.seed = o.seed;
        lo.samples = o.samples;
        lo.budget = b;
        LocReport rep = verify_localized_triangulation(inst, d, lo);
        out["checks"] = check_results_to_json(rep.checks);
        pass = rep.pass();
    } else {
        throw ParseError("unknown localize check: " + check);
    }
    out["pass"] = pass;
    return emit(o, out, pass);
}

int cmd_stable(const Options& o, const std::string& module_path, const std::string& ses_path) {
    Instances ii = make_instances(o);
    if (!ii.frob) throw ParseError("stable: needs --instance frobenius");
    json out = header(o, "stable", ii);
    bool pass = true;
    if (!module_path.empty()) {
        SqZeroModule m = module_from_json(load_json(module_path));
        ModuleDecomposition dec = ii.frob->decompose(m);
        auto [hull, emb] = ii.frob->injective_hull(m);
        auto [sus, pi] = ii.frob->suspend_raw(m);
        out["module"] = json{{"dim", m.dim},
                             {"free_rank", dec.free_rank},
                             {"trivial_rank", dec.trivial_rank},
                             {"hull_dim", hull.dim},
                             {"suspension_dim", sus.dim}};
    }
    if (!ses_path.empty()) {
        json j = load_json(ses_path);
        SqZeroModule a = module_from_json(j.at("a"));
        SqZeroModule bm = module_from_json(j.at("b"));
        SqZeroModule c = module_from_json(j.at("c"));
        CandidateTriangle t = ii.frob->ses_to_triangle(a, bm, c, matrix_from_json(j.at("i")),
                                                       matrix_from_json(j.at("p")));
        auto ok = ii.frob->is_triangle(t);
        out["ses_triangle"] = json{{"x", t.x.name()},
                                   {"y", t.y.name()},
                                   {"z", t.z.name()},
                                   {"is_triangle", !ok.has_value() || *ok},
                                   {"connecting_stably_zero", ii.frob->is_zero_mor(t.h)}};
        pass = pass && (!ok.has_value() || *ok);
    }
    out["pass"] = pass;
    return emit(o, out, pass);
}

int cmd_decompose(const Options& o, const std::string& t_path) {
    Instances ii = make_instances(o);
    if (!ii.vect) throw ParseError("decompose: needs --instance vect");
    CandidateTriangle t = vect_triangle_from_json(*ii.vect, load_json(t_path));
    TriangleDecomposition d = decompose_triangle(*ii.vect, t);
    std::string why;
    bool ok = validate_triangle_morphism(*ii.vect, d.iso, &why);
    json out = header(o, "decompose", ii);
    out["counts"] = json{{"n1", d.n1}, {"n2", d.n2}, {"n3", d.n3}};
    out["iso_valid"] = ok;
    out["pass"] = ok;
    return emit(o, out, ok);
}

int cmd_report(const Options& o) {
    json out{{"command", "report"}, {"seed", o.seed}};
    bool pass = true;
    json entries = json::array();
    for (const std::string sel : {"vect", "chain", "frobenius", "op-of:vect"}) {
        Options so = o;
        so.instance = sel;
        if (sel == "chain") so.field = "Fp:5";
        Instances ii = make_instances(so);
        VerifyOptions vo;
        vo.seed = so.seed;
        vo.samples = so.samples;
        vo.budget = budget_of(so);
        VerifyReport rep = verify_axioms(*ii.active, vo);
        entries.push_back(json{{"instance", ii.active->name()},
                               {"pass", rep.pass()},
                               {"checks", check_results_to_json(rep.checks)}});
        pass = pass && rep.pass();
    }
    out["suites"] = entries;
    out["pass"] = pass;
    return emit(o, out, pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in triangulated categories"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--instance", o.instance, "vect | chain | frobenius | op-of:<instance>");
    app.add_option("--field", o.field, "Q | Fp:<p>");
    app.add_option("--seed", o.seed, "sampler seed (fixed seed => identical report)");
    app.add_option("--samples", o.samples, "sample budget");
    app.add_option("--max-dim", o.max_dim, "object dimension bound");
    app.add_option("--max-length", o.max_length, "chain support length bound");
    app.add_option("--max-deg-dim", o.max_deg_dim, "chain per-degree dimension bound");
    app.add_option("--subcat", o.subcat,
                   "even_dim | zero_only | acyclic | all | generated_by_cones");
    app.add_option("--generators", o.generators, "generator morphisms for generated_by_cones");
    app.add_option("--out", o.out, "write the JSON report here instead of stdout");
    app.add_option("--dot", o.dot, "write a DOT diagram here, where supported");

    std::string f_path, g_path, h_path, t1_path, t2_path, j_path, k_path, t_path;
    std::string module_path, ses_path, check = "suite";
    int left = 1, right = 1;

    app.add_subcommand("verify-axioms", "run the whole axiom battery");
    auto* cone = app.add_subcommand("cone", "complete a morphism to a triangle");
    cone->add_option("--f", f_path, "morphism file")->required();
    auto* oct = app.add_subcommand("octahedron", "composition-axiom data for a pair");
    oct->add_option("--f", f_path)->required();
    oct->add_option("--g", g_path)->required();
    auto* fill = app.add_subcommand("fill", "filling morphism for a commuting square");
    fill->add_option("--t1", t1_path)->required();
    fill->add_option("--t2", t2_path)->required();
    fill->add_option("--j", j_path)->required();
    fill->add_option("--k", k_path)->required();
    auto* pup = app.add_subcommand("puppe", "two-sided triangle extension");
    pup->add_option("--t", t_path)->required();
    pup->add_option("--left", left);
    pup->add_option("--right", right);
    auto* br = app.add_subcommand("braid", "braid of a composition");
    br->add_option("--f", f_path)->required();
    br->add_option("--g", g_path)->required();
    auto* grid = app.add_subcommand("three-by-three", "complete a commuting square to the grid");
    grid->set_help_flag("--help", "print help");
    grid->add_option("--f", f_path, "top")->required();
    grid->add_option("--j", j_path, "left")->required();
    grid->add_option("--k", k_path, "right")->required();
    grid->add_option("--h", h_path, "bottom")->required();
    auto* tri = app.add_subcommand("triple", "triangle of a composable triple");
    tri->set_help_flag("--help", "print help");
    tri->add_option("--f", f_path)->required();
    tri->add_option("--g", g_path)->required();
    tri->add_option("--h", h_path)->required();
    auto* loc = app.add_subcommand("localize", "subcategory and quotient checks");
    loc->add_option("--check", check, "thick | trivial | two-of-three | kernel | suite");
    auto* stable = app.add_subcommand("stable", "stable module computations");
    stable->add_option("--module", module_path, "module file");
    stable->add_option("--ses", ses_path, "short exact sequence file");
    auto* dec = app.add_subcommand("decompose", "elementary decomposition of an exact triple");
    dec->add_option("--t", t_path, "triangle file")->required();
    app.add_subcommand("report", "aggregate verification across instances");
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("verify-axioms")) return cmd_verify(o);
        if (app.got_subcommand("cone")) return cmd_cone(o, f_path);
        if (app.got_subcommand("octahedron")) return cmd_octahedron(o, f_path, g_path);
        if (app.got_subcommand("fill")) return cmd_fill(o, t1_path, t2_path, j_path, k_path);
        if (app.got_subcommand("puppe")) return cmd_puppe(o, t_path, left, right);
        if (app.got_subcommand("braid")) return cmd_braid(o, f_path, g_path);
        if (app.got_subcommand("three-by-three"))
            return cmd_grid(o, f_path, j_path, k_path, h_path);
        if (app.got_subcommand("triple")) return cmd_triple(o, f_path, g_path, h_path);
        if (app.got_subcommand("localize")) return cmd_localize(o, check);
        if (app.got_subcommand("stable")) return cmd_stable(o, module_path, ses_path);
        if (app.got_subcommand("decompose")) return cmd_decompose(o, t_path);
        if (app.got_subcommand("report")) return cmd_report(o);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
