#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octgi/algebra.hpp"
#include "octgi/eval.hpp"
#include "octgi/freealg.hpp"

namespace octgi {

/// Result of the exhaustive homogeneous-basis check. Complete for
/// multilinear input since every component is spanned by its basis.
struct MultilinearCheck {
  bool identity = false;
  std::vector<GradedVar> vars;      // sorted; parallel to witness
  std::vector<int> witness;         // basis indices of the first failing tuple
  QElem value;                      // nonzero value at the witness
};

MultilinearCheck is_identity_multilinear(const Poly& f, const CayleyDickson& alg,
                                         const Grading& g);

/// Substitutes a generic element (fresh polynomial indeterminates per
/// coordinate) for every variable and evaluates exactly; complete for any
/// graded polynomial over the rationals.
bool is_identity_generic(const Poly& f, const CayleyDickson& alg, const Grading& g);

/// Chooses the complete checker for the input: basis sweep when multilinear,
/// generic evaluation otherwise.
bool is_identity(const Poly& f, const CayleyDickson& alg, const Grading& g);

/// For an identity f whose greatest variable x has grade zero: extracts the
/// slot identities of the structured form (the y_i, or the pair slots
/// reassembled as sum_j y_ij x z_ij with a single x). Each returned
/// polynomial is verified to be an identity itself.
std::vector<Poly> split_by_generic_coefficients(const Poly& f, const GradedVar& x,
                                                const CayleyDickson& alg, const Grading& g);

struct CatalogRow {
  std::string label;   // "1".."16" (15 split as 15a/15b)
  std::string name;
  bool pass = false;
  long instances = 0;  // grade assignments satisfying the side condition
};

/// Runs the full catalog for the grading ((1)-(4) for z2_3, (5)-(16) for
/// z2_2) through the appropriate checker, one row per equation.
std::vector<CatalogRow> verify_catalog(const CayleyDickson& alg, const Grading& g);

}  // namespace octgi
