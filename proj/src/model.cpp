#include "leviflat/model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "leviflat/parser.hpp"

namespace lf {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

GaussianRational parse_value(const std::string& s, int line) {
    try {
        static const ContextPtr empty = make_context(0);
        Polynomial p = parse_poly(s, empty);
        return p.constant_coefficient();
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad value '") + s + "': " + e.what(), line, 1);
    }
}

// 1-form from an expression over z-variables and dz-symbols.
DifferentialForm parse_form(const std::string& src, const ContextPtr& zctx, int line) {
    std::vector<std::string> names = zctx->names();
    for (const auto& n : zctx->names()) names.push_back("d" + n);
    ContextPtr ectx = make_context(2 * zctx->size(), 0, std::move(names));
    Polynomial p = parse_poly(src, ectx);

    std::size_t n = zctx->size();
    std::vector<std::size_t> down(ectx->size(), zctx->size());
    for (std::size_t k = 0; k < n; ++k) down[k] = k;

    DifferentialForm w(zctx, 1);
    for (const auto& [m, c] : p.terms()) {
        std::size_t dz_index = n, dz_count = 0;
        Monomial rest = m;
        for (std::size_t k = n; k < 2 * n; ++k) {
            dz_count += m[k];
            if (m[k]) {
                dz_index = k - n;
                rest[k] = 0;
            }
        }
        if (dz_count != 1)
            throw ParseError("each term of a 1-form needs exactly one dz factor", line, 1);
        Polynomial coeff = Polynomial::term(ectx, rest, c).remap(zctx, down);
        w.add_term({dz_index}, coeff);
    }
    return w;
}

} // namespace

ModelFile load_model(const std::string& text) {
    ModelFile mf;
    std::vector<Polynomial> raw_gens;
    std::vector<VectorField> fields;
    std::vector<DifferentialForm> forms;
    std::vector<std::string> param_names;
    std::vector<std::string> family_exprs, constraint_exprs;
    std::optional<std::string> num_expr, den_expr;
    std::vector<std::pair<std::string, int>> sample_lines;
    bool have_ambient = false, have_levi = false;

    ContextPtr full, zctx;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        std::size_t sp = line.find_first_of(" \t");
        std::string key = sp == std::string::npos ? line : line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : strip(line.substr(sp + 1));

        auto need_context = [&]() {
            if (!have_ambient) throw ParseError("'ambient' must precede '" + key + "'", lineno, 1);
        };

        if (key == "name") {
            mf.name = rest;
        } else if (key == "ambient") {
            if (have_ambient) throw ParseError("duplicate 'ambient'", lineno, 1);
            long n = std::stol(rest);
            if (n < 1 || n > 16) throw ParseError("ambient dimension out of range", lineno, 1);
            mf.ambient = std::size_t(n);
            full = make_context(mf.ambient, mf.ambient);
            zctx = z_subcontext(full);
            have_ambient = true;
        } else if (key == "levi") {
            mf.levi_dim = int(std::stol(rest));
            have_levi = true;
        } else if (key == "gen") {
            need_context();
            raw_gens.push_back(parse_poly(rest, full));
        } else if (key == "field") {
            need_context();
            std::vector<Polynomial> comps;
            for (const std::string& e : split_commas(rest)) comps.push_back(parse_poly(e, zctx));
            if (comps.size() != mf.ambient)
                throw ParseError("field needs one component per coordinate", lineno, 1);
            fields.emplace_back(zctx, std::move(comps));
        } else if (key == "form") {
            need_context();
            forms.push_back(parse_form(rest, zctx, lineno));
        } else if (key == "params") {
            for (const std::string& p : split_commas(rest)) {
                if (p.empty()) throw ParseError("empty parameter name", lineno, 1);
                param_names.push_back(p);
            }
        } else if (key == "family") {
            family_exprs.push_back(rest);
        } else if (key == "constraint") {
            constraint_exprs.push_back(rest);
        } else if (key == "num") {
            num_expr = rest;
        } else if (key == "den") {
            den_expr = rest;
        } else if (key == "curve") {
            mf.curve = HermitianPoly(parse_poly(rest, make_context(1, 1, {"u", "wu"})));
        } else if (key == "sample") {
            sample_lines.emplace_back(rest, lineno);
        } else {
            throw ParseError("unknown section '" + key + "'", lineno, 1);
        }
    }

    if (!have_ambient) throw ParseError("missing 'ambient' declaration", 1, 1);
    if (!have_levi) throw ParseError("missing 'levi' declaration", 1, 1);
    if (!raw_gens.empty())
        mf.model = LeviFlatModel::from_defining_polynomials(full, std::move(raw_gens), mf.levi_dim);

    if (!fields.empty()) mf.fields = FoliationPresentation::from_fields(std::move(fields));
    if (!forms.empty()) mf.forms = FoliationPresentation::from_forms(std::move(forms));

    if (!family_exprs.empty() || !constraint_exprs.empty()) {
        std::vector<std::string> names = zctx->names();
        for (const auto& p : param_names) names.push_back(p);
        ContextPtr fctx = make_context(mf.ambient + param_names.size(), 0, std::move(names));
        LeafFamily fam{fctx, mf.ambient, {}, {}};
        for (const auto& e : family_exprs) fam.members.push_back(parse_poly(e, fctx));
        for (const auto& e : constraint_exprs) fam.constraints.push_back(parse_poly(e, fctx));
        mf.family = std::move(fam);
    }

    if (num_expr.has_value() != den_expr.has_value())
        throw ParseError("'num' and 'den' must be given together", 1, 1);
    if (num_expr) mf.integral = {parse_poly(*num_expr, zctx), parse_poly(*den_expr, zctx)};

    for (const auto& [src, ln] : sample_lines) {
        std::size_t at = src.find('@');
        if (at == std::string::npos) throw ParseError("sample needs '<params> @ <point>'", ln, 1);
        LeviSample s;
        std::string params = strip(src.substr(0, at));
        if (!params.empty())
            for (const std::string& v : split_commas(params)) s.params.push_back(parse_value(v, ln));
        for (const std::string& v : split_commas(strip(src.substr(at + 1))))
            s.point.push_back(parse_value(v, ln));
        if (s.point.size() != mf.ambient)
            throw ParseError("sample point length does not match the ambient dimension", ln, 1);
        mf.samples.push_back(std::move(s));
    }
    return mf;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_model(buf.str());
}

std::vector<LeviSample> enumerate_samples(const LeviFlatModel& H, const LeafFamily& family,
                                          std::size_t count, std::uint64_t seed) {
    // Small-height scalar pool, shuffled once by the seed.
    std::vector<GaussianRational> pool = {
        GaussianRational(0),  GaussianRational(1),      GaussianRational(-1),
        GaussianRational(2),  GaussianRational(-2),     GaussianRational(mpq_class(1, 2)),
        GaussianRational(mpq_class(-1, 2)),             GaussianRational(3),
        GaussianRational(mpq_class(0), mpq_class(1)),   GaussianRational(mpq_class(0), mpq_class(-1)),
        GaussianRational(mpq_class(1), mpq_class(1)),   GaussianRational(mpq_class(3, 2))};
    std::mt19937_64 gen(seed);
    std::shuffle(pool.begin(), pool.end(), gen);

    std::size_t n = H.zcontext()->size();
    std::vector<LeviSample> out;

    // Graded odometer over pool indices: total index weight grows, so small
    // heights come first and enumeration order is deterministic.
    for (std::size_t weight = 0; weight <= 4 * n && out.size() < count; ++weight) {
        std::vector<std::size_t> idx(n, 0);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t left) -> bool {
            if (out.size() >= count) return true;
            if (pos == n) {
                if (left != 0) return false;
                Point p;
                for (std::size_t k = 0; k < n; ++k) p.push_back(pool[idx[k]]);
                if (!H.contains_point(p)) return false;
                try {
                    MultiLeafResult ml = multi_leaf_detector(H, family, p);
                    for (std::size_t s = 0; s < ml.parameter_solutions.size(); ++s) {
                        out.push_back(LeviSample{ml.parameter_solutions[s], p});
                        if (out.size() >= count) return true;
                    }
                } catch (const Error&) {
                    // Degenerate or off-family points are skipped.
                }
                return false;
            }
            for (std::size_t i = 0; i <= left && i < pool.size(); ++i) {
                idx[pos] = i;
                if (rec(pos + 1, left - i)) return true;
            }
            idx[pos] = 0;
            return false;
        };
        rec(0, weight);
    }
    return out;
}

} // namespace lf
