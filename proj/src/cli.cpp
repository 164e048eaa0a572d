#include "leviflat/cli.hpp"

#include <chrono>

#include "json.hpp"
#include "leviflat/model.hpp"
#include "leviflat/parser.hpp"
#include "leviflat/segre.hpp"

namespace lf::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::map<std::string, std::string> flags;
    bool pretty = false;
    GBOptions gb;
    std::uint64_t seed = 0;

    bool has(const std::string& k) const { return flags.count(k) > 0; }
    const std::string& get(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) throw InputError("missing required flag --" + k);
        return it->second;
    }
};

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw InputError("no command given");
    o.command = args[0];
    std::size_t k = 1;
    // The example command takes one positional fixture name.
    if (o.command == "example") {
        if (k >= args.size()) throw InputError("example needs a fixture name");
        o.flags["fixture"] = args[k++];
    }
    for (; k < args.size(); ++k) {
        const std::string& a = args[k];
        if (a.rfind("--", 0) != 0) throw InputError("unexpected argument '" + a + "'");
        std::string key = a.substr(2);
        if (key == "pretty") {
            o.pretty = true;
            continue;
        }
        if (k + 1 >= args.size()) throw InputError("flag --" + key + " needs a value");
        o.flags[key] = args[++k];
    }
    if (o.has("budget")) {
        long b = std::stol(o.get("budget"));
        if (b <= 0) throw InputError("budget must be positive");
        o.gb.max_reductions = std::uint64_t(b);
    }
    if (o.has("order")) {
        const std::string& ord = o.get("order");
        if (ord == "grevlex") {
            o.gb.default_order = TermOrder::grevlex();
        } else if (ord == "lex") {
            o.gb.default_order = TermOrder::lex();
        } else {
            throw InputError("unknown order '" + ord + "' (grevlex or lex)");
        }
    }
    if (o.has("seed")) o.seed = std::stoull(o.get("seed"));
    return o;
}

ModelFile load_for(const Options& o) {
    const std::string& spec = o.get("model");
    auto it = builtin_fixtures().find(spec);
    if (it != builtin_fixtures().end()) return load_model(it->second);
    return load_model_file(spec);
}

Point parse_point(const std::string& text, std::size_t n) {
    static const ContextPtr empty = make_context(0);
    Point p;
    std::string cur;
    auto flush = [&]() {
        p.push_back(parse_poly(cur, empty).constant_coefficient());
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    if (p.size() != n) throw InputError("point needs " + std::to_string(n) + " coordinates");
    return p;
}

json point_json(const Point& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(c.str());
    return a;
}

json generators_json(const Ideal& I, bool conjugate_style = false) {
    json a = json::array();
    for (const Polynomial& g : I.generators()) a.push_back(print_poly(g, conjugate_style));
    return a;
}

std::string form_text(const DifferentialForm& w) {
    // Degree-one forms as expressions over dz-symbols.
    std::string out;
    for (const auto& [t, c] : w.terms()) {
        std::string coeff = print_poly(c);
        std::string dz = "d" + w.context()->name(t[0]);
        std::string term = (coeff == "1") ? dz : "(" + coeff + ")*" + dz;
        if (out.empty()) {
            out = term;
        } else {
            out += "+" + term;
        }
    }
    return out.empty() ? "0" : out;
}

json foliation_json(const FoliationPresentation& F) {
    json out;
    if (F.kind() == FoliationPresentation::Kind::Fields) {
        json fs = json::array();
        for (const VectorField& v : F.fields()) {
            json comps = json::array();
            for (const Polynomial& c : v.components()) comps.push_back(print_poly(c));
            fs.push_back(comps);
        }
        out["fields"] = fs;
    } else {
        json ws = json::array();
        for (const DifferentialForm& w : F.forms()) ws.push_back(form_text(w));
        out["forms"] = ws;
    }
    return out;
}

// The foliation used by tangency-style commands: explicit fields when the
// model has them, otherwise the kernel fields of a single form.
FoliationPresentation tangency_presentation(const ModelFile& mf) {
    if (mf.fields) return *mf.fields;
    if (mf.forms) return FoliationPresentation::from_fields(mf.forms->spanning_fields());
    throw InputError("model declares no foliation");
}

json sample_json(const SampleVerdict& v) {
    json s;
    s["params"] = point_json(v.sample.params);
    s["point"] = point_json(v.sample.point);
    s["params_on_constraints"] = v.params_on_constraints;
    s["point_on_model"] = v.point_on_model;
    s["point_on_leaf"] = v.point_on_leaf;
    if (v.leaf_checked) {
        s["leaf_contained_in_model"] = v.leaf.contained_in_model;
        s["leaf_contains_segre_slice"] = v.leaf.contains_segre_slice;
        s["leaf_dimension_ok"] = v.leaf.dimension_ok;
        s["leaf_dim_is_levi_dim"] = v.leaf_dim_is_n;
        s["tangent_matches_cr"] = v.tangent_matches_cr;
        s["cr_dimension"] = v.cr_dimension;
    }
    if (!v.note.empty()) s["note"] = v.note;
    s["ok"] = v.ok();
    return s;
}

struct CommandOutcome {
    json result;
    json certificates = json::object();
    int code = 0;
};

CommandOutcome cmd_complexify(const Options& o) {
    CommandOutcome out;
    std::string expr;
    ContextPtr ctx;
    if (o.has("expr")) {
        expr = o.get("expr");
        std::size_t n = 1;
        if (o.has("ambient")) {
            n = std::size_t(std::stol(o.get("ambient")));
        } else {
            // Infer the ambient dimension from the largest index used.
            for (std::size_t k = 0; k + 1 < expr.size(); ++k) {
                if ((expr[k] == 'z' || expr[k] == 'w') && std::isdigit(expr[k + 1])) {
                    std::size_t j = k + 1, idx = 0;
                    while (j < expr.size() && std::isdigit(expr[j])) idx = idx * 10 + (expr[j++] - '0');
                    if (idx > n) n = idx;
                }
            }
        }
        ctx = make_context(n, n);
    } else {
        throw InputError("complexify needs --expr");
    }
    HermitianPoly h(parse_poly(expr, ctx));
    out.result["input"] = print_poly(h.body(), true);
    out.result["complexified"] = print_poly(complexify(h));
    out.result["input_real"] = h.is_real();
    if (!h.is_real())
        out.certificates["warning"] = "input is not certified real; proceeding formally";
    return out;
}

CommandOutcome cmd_icomp(const Options& o) {
    ModelFile mf = load_for(o);
    IcompReport r = intrinsic_complexification(mf.require_model(), o.gb);
    CommandOutcome out;
    out.result["generators"] = generators_json(r.ideal);
    out.result["dim"] = r.dim ? json(*r.dim) : json("empty");
    if (r.expected_dim) out.result["expected_dim"] = *r.expected_dim;
    out.certificates["dim_matches"] = r.dim_matches();
    return out;
}

CommandOutcome cmd_segre(const Options& o, bool classify_only) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    Point p = parse_point(o.get("at"), H.zcontext()->size());
    CommandOutcome out;
    if (classify_only) {
        Classification c = classify_point(H, p, o.gb);
        out.result["classification"] = to_string(c.classification);
        out.result["codim"] = c.codim_in_icomp;
    } else {
        SegreResult r = segre_variety(H, p, o.gb);
        out.result["point"] = point_json(p);
        out.result["generators"] = generators_json(r.ideal);
        out.result["dim"] = r.dim;
        out.result["codim"] = r.codim_in_icomp;
        out.result["classification"] = to_string(r.classification);
    }
    return out;
}

CommandOutcome cmd_sd_locus(const Options& o) {
    ModelFile mf = load_for(o);
    SdReport r = degenerate_locus(mf.require_model(), o.gb);
    CommandOutcome out;
    out.result["generators"] = generators_json(r.ideal);
    out.result["empty"] = r.empty;
    out.result["dim"] = r.empty ? json("empty") : json(r.dim);
    out.result["icomp_dim"] = r.icomp_dim;
    if (!r.empty) out.result["codim"] = r.codim();
    out.result["codim_at_least_two"] = r.codim_at_least_two;
    return out;
}

CommandOutcome cmd_tangent(const Options& o) {
    ModelFile mf = load_for(o);
    TangencyReport r = tangent_to_leviflat(tangency_presentation(mf), mf.require_model(), o.gb);
    CommandOutcome out;
    out.result["tangent"] = r.tangent;
    if (!r.tangent) out.certificates["witness"] = r.witness;
    out.code = r.tangent ? 0 : 1;
    return out;
}

CommandOutcome cmd_first_integral(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    auto zctx = H.zcontext();
    Polynomial num(zctx), den(zctx);
    if (o.has("num") || o.has("den")) {
        num = parse_poly(o.get("num"), zctx);
        den = parse_poly(o.get("den"), zctx);
    } else if (mf.integral) {
        num = mf.integral->first;
        den = mf.integral->second;
    } else {
        throw InputError("no rational function: give --num/--den or a num/den model section");
    }
    FirstIntegralReport r = verify_first_integral(num, den, tangency_presentation(mf),
                                                  H.icomplexification(o.gb), o.gb);
    CommandOutcome out;
    out.result["num"] = print_poly(num);
    out.result["den"] = print_poly(den);
    out.result["first_integral"] = r.ok;
    out.result["constant"] = r.constant;
    if (!r.ok) out.certificates["witness"] = r.witness;
    out.code = r.ok ? 0 : 1;
    return out;
}

CommandOutcome cmd_level_set(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    auto zctx = H.zcontext();
    if (!mf.integral && !(o.has("num") && o.has("den")))
        throw InputError("level-set needs a rational function (model num/den or --num/--den)");
    Polynomial num = o.has("num") ? parse_poly(o.get("num"), zctx) : mf.integral->first;
    Polynomial den = o.has("den") ? parse_poly(o.get("den"), zctx) : mf.integral->second;
    HermitianPoly curve = o.has("curve")
                              ? HermitianPoly(parse_poly(o.get("curve"), make_context(1, 1, {"u", "wu"})))
                              : (mf.curve ? *mf.curve
                                          : throw InputError("level-set needs a curve"));
    LevelSetReport r = verify_level_set_containment(H, num, den, curve, o.gb);
    CommandOutcome out;
    out.result["curve"] = print_poly(curve.body(), true);
    out.result["contained"] = r.contained;
    if (!r.contained) out.certificates["witness"] = r.witness;
    out.code = r.contained ? 0 : 1;
    return out;
}

CommandOutcome cmd_web(const Options& o) {
    ModelFile mf = load_for(o);
    if (!mf.family) throw InputError("model declares no leaf family");
    const LeafFamily& fam = *mf.family;
    if (fam.n_params() != 1) throw InputError("web extraction needs a one-parameter family");
    // The member that actually involves the parameter defines the web.
    std::size_t param = fam.n_ambient;
    const Polynomial* member = nullptr;
    for (const Polynomial& m : fam.members) {
        if (m.depends_on(param)) {
            if (member) throw InputError("several family members involve the parameter");
            member = &m;
        }
    }
    if (!member) throw InputError("no family member involves the parameter");
    WebResult web = web_from_family(*member, param);
    CommandOutcome out;
    out.result["order"] = web.order;
    out.result["equation"] = print_poly(web.equation);
    json vars = json::array();
    for (const auto& n : web.web_ctx->names()) vars.push_back(n);
    out.result["variables"] = vars;
    return out;
}

CommandOutcome cmd_cr(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    Point p = parse_point(o.get("at"), H.zcontext()->size());
    CRReport r = cr_tangent(H, p);
    CommandOutcome out;
    out.result["cr_dimension"] = r.cr_dimension;
    out.result["leaf_tangent_dim"] = r.leaf_tangent_dim;
    out.result["jacobian_rank"] = r.jacobian_rank;
    if (r.regular) out.result["regular"] = *r.regular;
    json basis = json::array();
    for (const Row& v : r.leaf_tangent_basis) basis.push_back(point_json(v));
    out.certificates["leaf_tangent_basis"] = basis;
    return out;
}

CommandOutcome cmd_check_levi(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    LeafFamily fam = mf.family ? *mf.family : throw InputError("model declares no leaf family");
    if (o.has("family")) {
        ModelFile override_file = load_model_file(o.get("family"));
        if (!override_file.family) throw InputError("--family file declares no family");
        fam = *override_file.family;
    }
    std::vector<LeviSample> samples = mf.samples;
    if (o.has("samples")) {
        ModelFile sample_file = load_model_file(o.get("samples"));
        samples = sample_file.samples;
    }
    if (samples.empty()) samples = enumerate_samples(H, fam, 4, o.seed);
    if (samples.empty()) throw InputError("no usable samples found");
    LeviCheckReport rep = check_levi_foliation(H, fam, samples, o.gb);
    CommandOutcome out;
    json arr = json::array();
    for (const auto& s : rep.samples) arr.push_back(sample_json(s));
    out.result["samples"] = arr;
    out.result["all_ok"] = rep.all_ok;
    out.code = rep.all_ok ? 0 : 1;
    return out;
}

CommandOutcome cmd_multileaf(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    if (!mf.family) throw InputError("model declares no leaf family");
    Point p = parse_point(o.get("at"), H.zcontext()->size());
    MultiLeafResult r = multi_leaf_detector(H, *mf.family, p, o.gb);
    CommandOutcome out;
    out.result["degenerate"] = r.degenerate;
    out.result["count"] = r.real_count;
    out.result["may_have_more"] = r.may_have_more;
    json params = json::array();
    for (const auto& sol : r.parameter_solutions) params.push_back(point_json(sol));
    out.result["parameters"] = params;
    json leaves = json::array();
    for (const Ideal& leaf : r.leaves) leaves.push_back(generators_json(leaf));
    out.result["leaves"] = leaves;
    if (!r.notes.empty()) out.certificates["notes"] = r.notes;
    return out;
}

CommandOutcome cmd_restrict(const Options& o) {
    ModelFile mf = load_for(o);
    const LeviFlatModel& H = mf.require_model();
    auto zctx = H.zcontext();
    Polynomial h = parse_poly(o.get("hyperplane"), zctx);
    const std::string what = o.has("what") ? o.get("what") : "icomp";
    CommandOutcome out;
    out.result["hyperplane"] = print_poly(h);
    if (what == "icomp") {
        RestrictedIdeal r = restrict_to_hyperplane(H.icomplexification(o.gb), h, o.gb);
        out.result["dropped"] = zctx->name(r.dropped_var);
        out.result["generators"] = generators_json(r.ideal);
        auto dim = krull_dimension(r.ideal, o.gb);
        out.result["dim"] = dim ? json(*dim) : json("empty");
    } else if (what == "foliation") {
        FoliationPresentation F = mf.forms ? *mf.forms : tangency_presentation(mf);
        RestrictedFoliation r = restrict_to_hyperplane(F, h, o.gb);
        out.result["dropped"] = zctx->name(r.dropped_var);
        out.result["foliation"] = foliation_json(r.foliation);
        out.result["singular_generators"] = generators_json(r.singular.ideal);
        out.result["singular_dim"] = r.singular.empty ? json("empty") : json(r.singular.dim);
        out.result["generic"] = r.generic;
        out.certificates["codim_at_least_two"] = r.singular.codim_at_least_two;
    } else {
        throw InputError("--what must be icomp or foliation");
    }
    return out;
}

// Example pipelines: each step records a label and a verdict.
struct Steps {
    json list = json::array();
    bool all_ok = true;
    void add(const std::string& name, bool ok, json detail = json::object()) {
        json s;
        s["name"] = name;
        s["ok"] = ok;
        if (!detail.empty()) s["detail"] = detail;
        list.push_back(s);
        if (!ok) all_ok = false;
    }
};

Ideal ideal_from(const std::vector<std::string>& exprs, const ContextPtr& ctx) {
    std::vector<Polynomial> gens;
    for (const auto& e : exprs) gens.push_back(parse_poly(e, ctx));
    return Ideal(ctx, std::move(gens));
}

void pipeline_ex1(const Options& o, Steps& steps) {
    ModelFile mf = load_model(builtin_fixtures().at("ex1"));
    const LeviFlatModel& H = mf.require_model();
    auto ctx = H.context();
    auto zctx = H.zcontext();

    HermitianPoly gen(parse_poly("~z3*z2-~z2*z3", ctx));
    steps.add("complexify_generator",
              complexify(gen) == parse_poly("w3*z2-w2*z3", ctx),
              {{"complexified", print_poly(complexify(gen))}});

    steps.add("complexified_ideal",
              ideal_equal(H.complexified(o.gb), ideal_from({"~z3*z2-~z2*z3", "z4", "~z4"}, ctx), o.gb));

    IcompReport ic = intrinsic_complexification(H, o.gb);
    steps.add("icomp_is_z4_hyperplane",
              ideal_equal(ic.ideal, ideal_from({"z4"}, zctx), o.gb) && ic.dim == 3 && ic.dim_matches(),
              {{"generators", generators_json(ic.ideal)}});

    SdReport sd = degenerate_locus(H, o.gb);
    steps.add("sd_locus_is_z1_axis",
              ideal_equal(sd.ideal, ideal_from({"z2", "z3", "z4"}, zctx), o.gb) && !sd.empty &&
                  sd.codim() == 2 && sd.codim_at_least_two,
              {{"generators", generators_json(sd.ideal)}, {"codim", sd.codim()}});

    steps.add("form_integrable", mf.forms && is_integrable(*mf.forms));

    SingularLocusReport sing = singular_locus(*mf.forms, o.gb);
    steps.add("singular_locus_codim_two",
              ideal_equal(sing.ideal, ideal_from({"z2", "z3"}, zctx), o.gb) && sing.codim() == 2,
              {{"generators", generators_json(sing.ideal)}});

    TangencyReport tang = tangent_to_leviflat(*mf.fields, H, o.gb);
    steps.add("foliation_tangent", tang.tangent);

    FirstIntegralReport fi = verify_first_integral(mf.integral->first, mf.integral->second,
                                                   *mf.fields, ic.ideal, o.gb);
    steps.add("rational_first_integral", fi.ok && !fi.constant);

    LevelSetReport ls =
        verify_level_set_containment(H, mf.integral->first, mf.integral->second, *mf.curve, o.gb);
    steps.add("level_set_containment", ls.contained);
}

void pipeline_ex2(const Options& o, Steps& steps) {
    ModelFile mf = load_model(builtin_fixtures().at("ex2"));
    const LeviFlatModel& H = mf.require_model();
    auto zctx = H.zcontext();

    IcompReport ic = intrinsic_complexification(H, o.gb);
    steps.add("icomp_is_z4_hyperplane",
              ideal_equal(ic.ideal, ideal_from({"z4"}, zctx), o.gb) && ic.dim == 3,
              {{"generators", generators_json(ic.ideal)}});

    // Leaves for c in {0, 1, -2, 1/3} verified at regular points.
    static const ContextPtr empty = make_context(0);
    bool leaves_ok = true;
    for (const char* c : {"0", "1", "-2", "1/3"}) {
        GaussianRational cv = parse_poly(c, empty).constant_coefficient();
        Ideal leaf = mf.family->leaf_at({cv}, zctx);
        Point p = {-(cv + cv * cv * GaussianRational::i()), GaussianRational(1),
                   GaussianRational::i(), GaussianRational(0)};
        LeafReport lr = verify_leaf(H, leaf, p, o.gb);
        if (!lr.ok()) leaves_ok = false;
    }
    steps.add("plane_family_leaves_verified", leaves_ok);

    WebResult web = web_from_family(mf.family->members[0], 4);
    steps.add("web_order_two", web.order == 2, {{"equation", print_poly(web.equation)}});

    MultiLeafResult ml = multi_leaf_detector(H, *mf.family, parse_point("-2,1,1,0", 4), o.gb);
    steps.add("two_leaves_through_web_point", ml.real_count == 2 && !ml.degenerate,
              {{"count", ml.real_count}});

    bool none_tangent = true;
    for (const char* c : {"0", "1", "-2"}) {
        std::string cs(c);
        std::vector<VectorField> fields;
        std::vector<Polynomial> v1{parse_poly(cs, zctx), parse_poly("-1", zctx),
                                   parse_poly("0", zctx), parse_poly("0", zctx)};
        std::vector<Polynomial> v2{parse_poly("(" + cs + ")^2", zctx), parse_poly("0", zctx),
                                   parse_poly("-1", zctx), parse_poly("0", zctx)};
        fields.emplace_back(zctx, std::move(v1));
        fields.emplace_back(zctx, std::move(v2));
        TangencyReport t =
            tangent_to_leviflat(FoliationPresentation::from_fields(std::move(fields)), H, o.gb);
        if (t.tangent) none_tangent = false;
    }
    steps.add("no_single_branch_foliation_tangent", none_tangent);
}

void pipeline_ex3(const Options& o, Steps& steps) {
    ModelFile mf = load_model(builtin_fixtures().at("ex3-circle"));
    const LeviFlatModel& H = mf.require_model();
    auto zctx = H.zcontext();

    IcompReport ic = intrinsic_complexification(H, o.gb);
    steps.add("icomp_is_quadric", ideal_equal(ic.ideal, ideal_from({"z1*z4-z2*z3"}, zctx), o.gb),
              {{"generators", generators_json(ic.ideal)}});

    static const ContextPtr empty = make_context(0);
    Point p = parse_point("3/5,1,0,0", 4);
    bool leaves_ok = true;
    for (const char* y : {"4/5", "-4/5"}) {
        GaussianRational yv = parse_poly(y, empty).constant_coefficient();
        Ideal leaf = mf.family->leaf_at({parse_poly("3/5", empty).constant_coefficient(), yv}, zctx);
        LeafReport lr = verify_leaf(H, leaf, p, o.gb);
        if (!lr.ok()) leaves_ok = false;
    }
    steps.add("lifted_circle_leaves_verified", leaves_ok);

    MultiLeafResult ml = multi_leaf_detector(H, *mf.family, p, o.gb);
    steps.add("at_least_two_leaves_through_test_point", ml.real_count >= 2,
              {{"count", ml.real_count}});
}

CommandOutcome cmd_example(const Options& o) {
    const std::string& which = o.get("fixture");
    Steps steps;
    if (which == "ex1") {
        pipeline_ex1(o, steps);
    } else if (which == "ex2") {
        pipeline_ex2(o, steps);
    } else if (which == "ex3-circle") {
        pipeline_ex3(o, steps);
    } else {
        throw InputError("unknown example '" + which + "' (ex1, ex2, ex3-circle)");
    }
    CommandOutcome out;
    out.result["example"] = which;
    out.result["steps"] = steps.list;
    out.result["all_ok"] = steps.all_ok;
    out.code = steps.all_ok ? 0 : 1;
    return out;
}

json inputs_json(const Options& o) {
    json in = json::object();
    for (const auto& [k, v] : o.flags) in[k] = v;
    return in;
}

} // namespace

CliResult run_command(const std::vector<std::string>& args) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["schema_version"] = 1;
    int code = 0;

    Options o;
    try {
        o = parse_args(args);
        report["command"] = o.command;
        report["inputs"] = inputs_json(o);

        CommandOutcome outcome;
        if (o.command == "complexify") {
            outcome = cmd_complexify(o);
        } else if (o.command == "icomp") {
            outcome = cmd_icomp(o);
        } else if (o.command == "segre") {
            outcome = cmd_segre(o, false);
        } else if (o.command == "classify") {
            outcome = cmd_segre(o, true);
        } else if (o.command == "sd-locus") {
            outcome = cmd_sd_locus(o);
        } else if (o.command == "tangent") {
            outcome = cmd_tangent(o);
        } else if (o.command == "first-integral") {
            outcome = cmd_first_integral(o);
        } else if (o.command == "level-set") {
            outcome = cmd_level_set(o);
        } else if (o.command == "web") {
            outcome = cmd_web(o);
        } else if (o.command == "cr") {
            outcome = cmd_cr(o);
        } else if (o.command == "check-levi") {
            outcome = cmd_check_levi(o);
        } else if (o.command == "multileaf") {
            outcome = cmd_multileaf(o);
        } else if (o.command == "restrict") {
            outcome = cmd_restrict(o);
        } else if (o.command == "example") {
            outcome = cmd_example(o);
        } else {
            throw InputError("unknown command '" + o.command + "'");
        }
        report["result"] = outcome.result;
        report["certificates"] = outcome.certificates;
        code = outcome.code;
    } catch (const BudgetExceededError& e) {
        report["error"] = e.what();
        code = 3;
    } catch (const Error& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        code = 2;
    }

    auto t1 = std::chrono::steady_clock::now();
    report["timings"] = {
        {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};

    std::string text = o.pretty ? report.dump(2) : report.dump();
    text += "\n";
    return {code, text};
}

} // namespace lf::cli
