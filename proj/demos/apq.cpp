// A(p,q) = D(A_0)/<chi x>: presentation checks, group-likes and a ribbon element.
// Usage: apq [p q t]   (default 7 3 2; takes about a minute)

#include <cstdlib>
#include <iostream>

#include "hopfkit/pipelines.hpp"

using namespace hopfkit;

int main(int argc, char** argv) {
  ScriptAParams a;
  if (argc == 4) a = {std::atol(argv[1]), std::atol(argv[2]), std::atol(argv[3]), 0};
  try {
    Stopwatch sw;
    ApqPipeline P = build_A_pq(a);
    auto& A = P.A();
    std::cout << A.name << ": dim " << A.dim() << (A.certified ? ", certified" : ", NOT certified") << " ("
              << sw.seconds() << " s)\n";
    Report pres = verify_Apq_presentation(P);
    std::cout << pres.to_text();
    auto G = group_like_closure(A, A.grouplikes);
    std::cout << "|<g,h,k>| = " << G.order() << "\n";
    std::vector<NamedElement> cands;
    for (std::size_t i = 0; i < G.order(); ++i) cands.push_back(to_named(G.labels[i], G.elements[i]));
    auto cert = drinfeld_element(A, P.Rbar());
    kr_ribbon_search(A, P.Rbar(), cert, cands, false);
    std::cout << "admissible l among the closure:";
    for (const auto& l : cert.admissible) std::cout << " " << l.label;
    std::cout << "\n(" << sw.seconds() << " s total)\n";
    return cert.ribbons.empty() ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
