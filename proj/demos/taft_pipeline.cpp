// Taft_n -> D(Taft_n) -> D(Taft_n)/<chi g>, then factorizability and ribbon elements.
// Usage: taft_pipeline [n]   (n >= 2, default 3)

#include <cstdlib>
#include <iostream>

#include "hopfkit/pipelines.hpp"

using namespace hopfkit;

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::atol(argv[1]) : 3;
  try {
    auto T = build_taft_pipeline(n);
    auto& K = T.K();
    std::cout << T.base->name << ": dim " << T.base->dim() << "\n"
              << T.dd->D.name << ": dim " << T.dd->D.dim() << "\n"
              << K.name << ": dim " << K.dim() << (K.certified ? ", certified" : ", NOT certified") << "\n";
    if (!T.qm.Rbar || !T.Rbar().verified) {
      std::cout << "pushed-forward R is not quasitriangular\n" << T.report.to_text();
      return 1;
    }
    auto fr = is_factorizable(K, T.Rbar(), Backend::Exact);
    std::cout << "monodromy rank " << fr.rank << "/" << K.dim() << (fr.factorizable ? " (factorizable)" : "") << "\n";

    auto gl = find_group_likes(K);
    std::vector<NamedElement> cands;
    for (std::size_t i = 0; i < gl.elements.size(); ++i) cands.push_back(to_named("l" + std::to_string(i), gl.elements[i]));
    auto cert = drinfeld_element(K, T.Rbar());
    kr_ribbon_search(K, T.Rbar(), cert, cands, gl.complete);
    std::cout << "|G(K)| = " << gl.elements.size() << (gl.complete ? "" : " (incomplete)") << ", admissible l: "
              << cert.admissible.size() << (cert.unique ? " (unique)" : "") << "\n";
    for (const auto& t : ribbon_templates(K, T.Rbar(), cert, cands, gl.complete))
      std::cout << "  " << t.name << ": " << status_name(t.status)
                << (t.predicted ? " predicts " + t.predicted_form + (t.prediction_holds ? ", confirmed" : ", refuted") : "")
                << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
