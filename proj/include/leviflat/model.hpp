#ifndef LEVIFLAT_MODEL_HPP
#define LEVIFLAT_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leviflat/foliation.hpp"
#include "leviflat/levicheck.hpp"

namespace lf {

// On-disk model description.  Line oriented; '#' starts a comment.
//
//   name ex1                 optional label
//   ambient 4                number of complex coordinates z1..zN (required)
//   levi 2                   Levi dimension of the model (required)
//   gen <expr>               defining polynomial in z / ~z (repeatable);
//                            each is split into real/imaginary parts
//   field <expr>, ..., <expr>   foliation field, one component per zk
//   form <expr>              foliation 1-form with dz-symbols (dz1..dzN)
//   params c | params x, y   leaf family parameter names
//   family <expr>            leaf family member over z and parameters
//   constraint <expr>        polynomial constraint among the parameters
//   num <expr> / den <expr>  rational first integral
//   curve <expr>             level curve in u, ~u
//   sample <params> @ <point>   check-levi sample (comma separated values)
struct ModelFile {
    std::string name;
    std::size_t ambient = 0;
    int levi_dim = 0;
    std::optional<LeviFlatModel> model;
    std::optional<FoliationPresentation> fields;
    std::optional<FoliationPresentation> forms;
    std::optional<LeafFamily> family;
    std::optional<std::pair<Polynomial, Polynomial>> integral;
    std::optional<HermitianPoly> curve;
    std::vector<LeviSample> samples;

    const LeviFlatModel& require_model() const {
        if (!model) throw InputError("model has no generators");
        return *model;
    }
};

ModelFile load_model(const std::string& text);
ModelFile load_model_file(const std::string& path);

// Deterministic seeded enumeration of small-height rational points on the
// model, paired with the rational family parameters of the leaves through
// them.  Used when no explicit samples are supplied.
std::vector<LeviSample> enumerate_samples(const LeviFlatModel& H, const LeafFamily& family,
                                          std::size_t count, std::uint64_t seed);

} // namespace lf

#endif
