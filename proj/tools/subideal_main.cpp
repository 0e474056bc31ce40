#include "subideal/query.hpp"

#include <iostream>

namespace {

constexpr const char* kUsage = R"(usage: subideal <command> <arguments> [options]

commands:
  member S I               is S a member of the ideal I
  soft S J                 is the principal ideal (S) J-soft
  classify S J             classify the J-ideals generated by S
  classify-fg S1 ... Sn J  same, for finitely many generators
  principality2 S T J      is the linear J-ideal generated by S and T principal
  equal I1 I2              do two ideal descriptions agree
  oracle ratio m           ratio limit 1/m on the upper decade of the window
  oracle divergence m      divergence above 10^3 on the upper half of the window
  oracle split c I J       factor c = x*y with x in I, y in J
  oracle softness S J      check the softness witness numerically

sequences: pow(p) pow(p,q) geo(r) fin(v1,...) scale(c,E) amp(m,E) dec(k,E)
           sum(E,E) max(E,E) prod(E,E)
ideals:    prin(E) KH FH prod(I,I) sum(I,I) pow(I,n)

options:
  --window N0:N1     comparison window; N1 is the oracle bound
  --tol x            oracle tolerance and vanishing threshold
  --grid k,m         search limits k_max, m_max (default 32,32)
  --force-numeric    sample instead of comparing normal forms
  --json             machine-readable output

exit status: 0 answer delivered, 2 unknown, 1 error
)";

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "-h" || args[0] == "--help") {
        std::cout << kUsage;
        return args.empty() ? 1 : 0;
    }
    try {
        const auto q = subideal::parse_query(args);
        const auto r = subideal::run(q);
        (r.exit_code == 1 ? std::cerr : std::cout) << r.output << '\n';
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "subideal: " << e.what() << '\n';
        return 1;
    }
}
