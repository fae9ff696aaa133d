#ifndef KCERT_TESTS_SUPPORT_MUTATIONS_HPP
#define KCERT_TESTS_SUPPORT_MUTATIONS_HPP

#include <string>
#include <vector>

#include "kcert/fittings/index.hpp"
#include "kcert/io/problem.hpp"

namespace kcert::testing {

struct Mutant {
  std::string description;
  io::Certificate certificate;
};

// Every index obtained by exchanging exactly one lind for rind or vice versa.
std::vector<fittings::FitIndex> single_flips(const fittings::FitIndex& i);

// Single-point mutations of a certificate.
//   decide trees: swap the aux indexes of two leaves that differ; flip one
//     lind/rind inside one decide or aux index.
//   essential evidence: drop one closure; drop one boxinfo; exchange the
//     second literals of two closures; flip one lind/rind inside one index.
// Mutations that leave the certificate unchanged are not generated.
std::vector<Mutant> single_mutations(const io::Certificate& c);

}  // namespace kcert::testing

#endif  // KCERT_TESTS_SUPPORT_MUTATIONS_HPP
