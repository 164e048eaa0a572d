#include <cstdio>
#include <string>
#include <vector>

#include "leviflat/cli.hpp"

namespace {

const char* kUsage =
    "usage: leviflat <command> [flags]\n"
    "\n"
    "commands:\n"
    "  complexify --expr E [--ambient N]        conjugate substitution of a hermitian polynomial\n"
    "  icomp --model M                          intrinsic complexification ideal\n"
    "  segre --model M --at P                   Segre variety at a point\n"
    "  classify --model M --at P                Segre ordinary/degenerate classification\n"
    "  sd-locus --model M                       Segre-degenerate locus\n"
    "  tangent --model M                        tangency of the model foliation\n"
    "  first-integral --model M [--num E --den E]\n"
    "  level-set --model M [--curve E]          containment of the model in a level set\n"
    "  web --model M                            implicit web equation of the leaf family\n"
    "  cr --model M --at P                      CR tangent data at a point\n"
    "  check-levi --model M [--family F --samples F]\n"
    "  multileaf --model M --at P               leaves of the family through a point\n"
    "  restrict --model M --hyperplane E [--what icomp|foliation]\n"
    "  example (ex1|ex2|ex3-circle)             run a built-in example pipeline\n"
    "\n"
    "flags: --pretty --budget N --order (grevlex|lex) --seed N\n"
    "M is a model file path or a built-in fixture name (ex1, ex2, ex3-circle).\n"
    "P is a comma separated list of Gaussian-rational coordinates, e.g. \"0,1,1,0\".\n";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::fputs(kUsage, stdout);
        return args.empty() ? 2 : 0;
    }
    lf::cli::CliResult r = lf::cli::run_command(args);
    std::fputs(r.output.c_str(), stdout);
    return r.code;
}
