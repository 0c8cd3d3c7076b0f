#pragma once

#include <stdexcept>
#include <string>

namespace rp {

enum class Errc {
  disconnected_input,
  not_root_connected,
  not_eulerian,
  not_a_basis,
  not_an_arborescence,
  no_basis,
  degenerate_dimension,
  classification_mismatch,
  nonintegral_hstar,
  non_tu_relation,
  not_totally_unimodular,
  singular_underdetermined,
  rank_deficient_pivot,
  negative_exponent,
  parse_error,
  range_error,
  too_large,
  budget_exceeded,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace rp
