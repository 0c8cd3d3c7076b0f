#include "rootpoly/error.hpp"

namespace rp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::disconnected_input: return "DISCONNECTED_INPUT";
    case Errc::not_root_connected: return "NOT_ROOT_CONNECTED";
    case Errc::not_eulerian: return "NOT_EULERIAN";
    case Errc::not_a_basis: return "NOT_A_BASIS";
    case Errc::not_an_arborescence: return "NOT_AN_ARBORESCENCE";
    case Errc::no_basis: return "NO_BASIS";
    case Errc::degenerate_dimension: return "DEGENERATE_DIMENSION";
    case Errc::classification_mismatch: return "CLASSIFICATION_MISMATCH";
    case Errc::nonintegral_hstar: return "NONINTEGRAL_HSTAR";
    case Errc::non_tu_relation: return "NON_TU_RELATION";
    case Errc::not_totally_unimodular: return "NOT_TOTALLY_UNIMODULAR";
    case Errc::singular_underdetermined: return "SINGULAR_UNDERDETERMINED";
    case Errc::rank_deficient_pivot: return "RANK_DEFICIENT_PIVOT";
    case Errc::negative_exponent: return "NEGATIVE_EXPONENT";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::range_error: return "RANGE_ERROR";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace rp
