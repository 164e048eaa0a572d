#include "leviflat/cli.hpp"

namespace lf::cli {

namespace {

const char* kEx1 = R"(# Cone over a Levi-flat subset of projective 3-space: the line family
# z3 = c z2 (real c) inside the hyperplane z4 = 0.
name ex1
ambient 4
levi 2
gen ~z3*z2-~z2*z3
gen z4
form z2*dz3-z3*dz2
field 1, 0, 0, 0
field 0, z2, z3, 0
params c
family z3-c*z2
family z4
num z3
den z2
curve u-~u
sample 0 @ 2, 1, 0, 0
sample 1 @ 0, 1, 1, 0
sample -2 @ 1, 1, -2, 0
sample 1/3 @ -1, 3, 1, 0
)";

const char* kEx2 = R"(# Cone swept by the plane family z1 + c z2 + c^2 z3 = 0 (real c) inside
# z4 = 0.  The generator is the parameter resultant of the family with its
# conjugate; no single ambient foliation is tangent, only a 2-web.
name ex2
ambient 4
levi 2
gen z1^2*~z3^2-z1*~z3*z2*~z2+z1*z3*~z2^2-2*z1*~z1*z3*~z3+~z1*~z3*z2^2-z3*~z1*z2*~z2+z3^2*~z1^2
gen z4
params c
family z1+c*z2+c^2*z3
family z4
sample 0 @ 0, 1, i, 0
sample 1 @ -1-i, 1, i, 0
sample 2 @ -2-4*i, 1, i, 0
)";

const char* kEx3 = R"(# Non-invariant model on the quadric z1 z4 = z2 z3: plane family
# z1 = x z2 + y z3 over the unit circle x^2 + y^2 = 1, lifted to the cone.
name ex3-circle
ambient 4
levi 2
gen (z1*~z3-~z1*z3)^2+(~z1*z2-z1*~z2)^2-(z2*~z3-~z2*z3)^2
gen z1*z4-z2*z3
params x, y
family z1-x*z2-y*z3
family z1*z4-z2*z3
constraint x^2+y^2-1
sample 3/5, 4/5 @ 3+4*i, 5, 5*i, 4+3*i
sample 3/5, -4/5 @ 3-4*i, 5, 5*i, -4+3*i
)";

} // namespace

const std::map<std::string, std::string>& builtin_fixtures() {
    static const std::map<std::string, std::string> fixtures = {
        {"ex1", kEx1}, {"ex2", kEx2}, {"ex3-circle", kEx3}};
    return fixtures;
}

} // namespace lf::cli
