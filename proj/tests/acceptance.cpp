// Acceptance suite: the verification criteria the artifact must meet, one
// pass/fail line per criterion, hard wall-clock limits included.  Exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "leviflat/cli.hpp"
#include "leviflat/model.hpp"
#include "leviflat/parser.hpp"
#include "leviflat/segre.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace lftest;
using json = nlohmann::json;

namespace {

struct Criterion {
    std::string label;
    long limit_ms;
    std::function<void(std::vector<std::string>&)> body; // appends failure notes
};

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

// ---- criteria 1-3: the example pipelines through the CLI ----------------

void run_example(const char* name, std::vector<std::string>& fails) {
    lf::cli::CliResult r = lf::cli::run_command({"example", name});
    json rep = json::parse(r.output);
    expect(fails, r.code == 0, std::string(name) + ": nonzero exit");
    if (!rep.contains("result")) {
        fails.push_back(std::string(name) + ": no result (" + rep.value("error", "?") + ")");
        return;
    }
    for (const auto& step : rep["result"]["steps"]) {
        if (step["ok"] != true)
            fails.push_back(std::string(name) + ": step " + step["name"].get<std::string>() +
                            " failed");
    }
}

// ---- criterion 4: property suites ----------------------------------------

// Bases computed along the way, re-checked against the Buchberger criterion.
std::vector<std::pair<Ideal, std::string>> g_checked_ideals;

void note_ideal(const Ideal& I, const std::string& name) {
    g_checked_ideals.emplace_back(I, name);
}

Point icomp_point(const std::string& which, Rng& rng) {
    if (which == "ex3-circle") {
        GaussianRational a = rng.coefficient(), b = rng.coefficient(), c = rng.coefficient();
        if (a.is_zero()) a = GaussianRational(1);
        return {a, b, c, b * c / a}; // on the quadric z1 z4 = z2 z3
    }
    return {rng.coefficient(), rng.coefficient(), rng.coefficient(), GaussianRational(0)};
}

void property_suites(std::vector<std::string>& fails) {
    const long sub_limit = 30000;
    Rng rng(2024);

    // (a) Segre symmetry on 100 sampled pairs per example.
    {
        long t0 = now_ms();
        for (const char* name : {"ex1", "ex2", "ex3-circle"}) {
            ModelFile mf = load_model(lf::cli::builtin_fixtures().at(name));
            const LeviFlatModel& H = *mf.model;
            note_ideal(H.complexified(), std::string(name) + " complexified");
            note_ideal(H.icomplexification(), std::string(name) + " icomp");
            for (int k = 0; k < 100; ++k) {
                Point p = icomp_point(name, rng);
                Point q = icomp_point(name, rng);
                if (!segre_symmetry_check(H, p, q)) {
                    fails.push_back(std::string("segre symmetry violated on ") + name);
                    break;
                }
            }
        }
        expect(fails, now_ms() - t0 < sub_limit, "segre symmetry suite exceeded 30 s");
    }

    // (b) Mirror involution and complexify/diagonal round trip, 200 random.
    {
        long t0 = now_ms();
        auto ctx = make_context(3, 3);
        for (int k = 0; k < 200; ++k) {
            HermitianPoly p(rng.polynomial(ctx, 4, 6));
            expect(fails, mirror(mirror(p)) == p, "mirror involution failed");
            HermitianPoly re = p.split_real_imaginary().first;
            expect(fails, diagonal_restrict(complexify(re)) == re,
                   "complexify/diagonal round trip failed");
            if (!fails.empty()) break;
        }
        expect(fails, now_ms() - t0 < sub_limit, "mirror suite exceeded 30 s");
    }

    // (c) X^C = X x X* for 20 random complex ideals, by mutual membership.
    {
        long t0 = now_ms();
        for (int k = 0; k < 20; ++k) {
            std::size_t n = std::size_t(rng.integer(1, 3));
            auto zctx = make_context(n);
            auto ctx = complexified_context(zctx);
            std::vector<Polynomial> raw, prod;
            int m = int(rng.integer(1, 2));
            for (int j = 0; j < m; ++j) {
                Polynomial f = rng.nonzero_polynomial(zctx, 2, 3);
                raw.push_back(embed_in_full(f, ctx));
                prod.push_back(embed_in_full(f, ctx));
                prod.push_back(mirror_into_w(f, ctx));
            }
            LeviFlatModel X = LeviFlatModel::from_defining_polynomials(ctx, raw);
            Ideal product(ctx, prod);
            if (!ideal_equal(X.complexified(), product)) {
                fails.push_back("complexification of a complex ideal is not the product");
                break;
            }
            note_ideal(X.complexified(), "random complex ideal " + std::to_string(k));
        }
        expect(fails, now_ms() - t0 < sub_limit, "product suite exceeded 30 s");
    }

    // (d) Strictness of icomp + mirror inside the complexification.
    {
        long t0 = now_ms();
        for (const char* name : {"ex1", "ex2"}) {
            ModelFile mf = load_model(lf::cli::builtin_fixtures().at(name));
            const LeviFlatModel& H = *mf.model;
            std::vector<Polynomial> gens;
            for (const Polynomial& g : H.icomplexification().generators()) {
                gens.push_back(embed_in_full(g, H.context()));
                gens.push_back(mirror_into_w(g, H.context()));
            }
            Ideal prod(H.context(), gens);
            expect(fails, ideal_contains_ideal(H.complexified(), prod),
                   std::string(name) + ": icomp product not inside the complexification");
            bool strict = false;
            for (const Polynomial& g : H.complexified().generators())
                if (!ideal_contains(prod, g)) strict = true;
            expect(fails, strict, std::string(name) + ": containment is not strict");
            note_ideal(prod, std::string(name) + " icomp product");
        }
        expect(fails, now_ms() - t0 < sub_limit, "strictness suite exceeded 30 s");
    }

    // (e) The degenerate locus has codimension >= 2 on every accepted model.
    {
        long t0 = now_ms();
        for (const char* name : {"ex1", "ex2", "ex3-circle"}) {
            ModelFile mf = load_model(lf::cli::builtin_fixtures().at(name));
            SdReport sd = degenerate_locus(*mf.model);
            expect(fails, sd.codim_at_least_two,
                   std::string(name) + ": degenerate locus codimension below two");
            note_ideal(sd.ideal, std::string(name) + " sd");
        }
        auto ctx = make_context(2, 2);
        LeviFlatModel flat = LeviFlatModel::from_defining_polynomials(
            ctx, {parse_poly("z1-~z1", ctx)}, 1);
        SdReport sd = degenerate_locus(flat);
        expect(fails, sd.empty && sd.codim_at_least_two,
               "hyperplane model: degenerate locus should be empty");
        expect(fails, now_ms() - t0 < sub_limit, "sd suite exceeded 30 s");
    }

    // (f) Post-hoc Buchberger criterion on every basis the suite computed.
    {
        long t0 = now_ms();
        for (const auto& [I, name] : g_checked_ideals) {
            const GroebnerBasis& gb = I.basis();
            if (!buchberger_criterion_holds(gb, *I.context()))
                fails.push_back("Buchberger criterion failed for " + name);
        }
        expect(fails, now_ms() - t0 < sub_limit, "Buchberger suite exceeded 30 s");
    }
}

// ---- criterion 5: oracle equivalence --------------------------------------

void oracle_equivalence(std::vector<std::string>& fails) {
    Rng rng(4096);
    int ideal_count = 0;

    auto check_membership = [&](const Ideal& I, const std::string& tag) {
        // Explicit combinations must be members for both routes.
        for (int r = 0; r < 2; ++r) {
            Polynomial f(I.context());
            for (const Polynomial& g : I.generators())
                f = f + rng.polynomial(I.context(), 2, 2) * g;
            if (f.is_zero()) continue;
            bool gb_member = normal_form(f, I).is_zero();
            bool oracle_member =
                lforacle::macaulay_member(f, I.generators(), unsigned(f.total_degree()));
            expect(fails, gb_member, tag + ": combination not recognized by normal form");
            expect(fails, oracle_member, tag + ": combination not certified by the oracle");
        }
        // A random probe may not be certified while reducing nonzero.
        Polynomial probe = rng.polynomial(I.context(), 3, 3);
        bool gb_member = normal_form(probe, I).is_zero();
        bool oracle_member = lforacle::macaulay_member(probe, I.generators(),
                                                       unsigned(probe.total_degree()) + 2);
        if (oracle_member && !gb_member)
            fails.push_back(tag + ": oracle certificate contradicts a nonzero normal form");
    };

    // Plain ideals: membership and dimension.
    for (int k = 0; k < 13; ++k, ++ideal_count) {
        long t0 = now_ms();
        std::size_t n = std::size_t(rng.integer(2, 3));
        auto ctx = make_context(n);
        std::vector<Polynomial> gens;
        int m = int(rng.integer(1, 2));
        for (int j = 0; j < m; ++j) gens.push_back(rng.nonzero_polynomial(ctx, 3, 3));
        Ideal I(ctx, gens);
        std::string tag = "ideal " + std::to_string(ideal_count);

        check_membership(I, tag);

        auto krull = krull_dimension(I);
        int oracle_dim = lforacle::hilbert_dimension(gens, ctx, 7);
        if (oracle_dim == -2) {
            fails.push_back(tag + ": Hilbert oracle did not stabilize");
        } else {
            int gb_dim = krull ? *krull : -1;
            expect(fails, gb_dim == oracle_dim,
                   tag + ": dimension mismatch (GB " + std::to_string(gb_dim) + ", oracle " +
                       std::to_string(oracle_dim) + ")");
        }
        note_ideal(I, tag);
        expect(fails, now_ms() - t0 < 2000, tag + " exceeded 2 s");
    }

    // Two-block ideals: elimination against the bounded-degree oracle.
    for (int k = 0; k < 12; ++k, ++ideal_count) {
        long t0 = now_ms();
        auto ctx = make_context(2, 2);
        std::vector<Polynomial> gens;
        int m = int(rng.integer(2, 3));
        for (int j = 0; j < m; ++j) gens.push_back(rng.nonzero_polynomial(ctx, 2, 3));
        Ideal I(ctx, gens);
        std::string tag = "elimination ideal " + std::to_string(ideal_count);

        check_membership(I, tag);

        Ideal E = eliminate(I, EliminationBlock::W);
        auto zctx = E.context();
        std::vector<bool> keep(ctx->size(), false);
        for (std::size_t v = 0; v < ctx->n_z(); ++v) keep[v] = true;

        // Completeness: everything the bounded oracle can certify as a
        // w-free member lies in the computed elimination ideal.
        for (const Polynomial& f : lforacle::macaulay_eliminate(I.generators(), keep, 6)) {
            Polynomial fz = restrict_to_z(f, zctx);
            if (!normal_form(fz, E).is_zero()) {
                fails.push_back(tag + ": oracle found an element outside the computed ideal");
                break;
            }
        }
        // Soundness: every computed generator carries an explicit Macaulay
        // certificate inside the original ideal.
        for (const Polynomial& g : E.generators()) {
            Polynomial lifted = embed_in_full(g, ctx);
            bool certified = false;
            for (unsigned b = unsigned(g.total_degree()); b <= 9 && !certified; ++b)
                certified = lforacle::macaulay_member(lifted, I.generators(), b);
            if (!certified) {
                fails.push_back(tag + ": no membership certificate for " + print_poly(g));
                break;
            }
        }
        note_ideal(E, tag + " (eliminated)");
        expect(fails, now_ms() - t0 < 2000, tag + " exceeded 2 s");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"[1] first example pipeline: complexification, icomp, degenerate locus, "
         "foliation, first integral, level set",
         5000, [](std::vector<std::string>& f) { run_example("ex1", f); }},
        {"[2] second example pipeline: icomp, plane leaves, 2-web, web point, "
         "no tangent single foliation",
         10000, [](std::vector<std::string>& f) { run_example("ex2", f); }},
        {"[3] circle example pipeline: quadric icomp, lifted leaves, two leaves "
         "through the test point",
         10000, [](std::vector<std::string>& f) { run_example("ex3-circle", f); }},
        {"[4] property suites: Segre symmetry, mirror involution, product "
         "complexification, strict containment, degenerate-locus codimension, "
         "Buchberger recheck",
         6 * 30000, property_suites},
        {"[5] Groebner engine agrees with the bounded-degree Macaulay oracle "
         "on 25 random ideals",
         25 * 2000, oracle_equivalence},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        std::vector<std::string> fails;
        long t0 = now_ms();
        try {
            c.body(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        long ms = now_ms() - t0;
        if (ms >= c.limit_ms) fails.push_back("time limit exceeded");
        bool ok = fails.empty();
        all_ok = all_ok && ok;
        std::printf("%s  %s (%ld ms, limit %ld ms)\n", ok ? "PASS" : "FAIL", c.label.c_str(), ms,
                    c.limit_ms);
        for (const auto& f : fails) std::printf("      - %s\n", f.c_str());
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_ok ? 0 : 1;
}
