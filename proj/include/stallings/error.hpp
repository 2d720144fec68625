#ifndef STALLINGS_ERROR_HPP_
#define STALLINGS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stallings {

  enum class error_kind {
    parse_error,
    relator_trivial,
    not_dehn_presentation,
    alphabet_mismatch,
    no_multiplier,
    internal_inconsistency,
    invalid_constant,
    certification_regression,
    inverse_closure_required,
    flag_required,
    structure_mismatch,
    k_must_be_infinite,
    budget_exhausted,
    too_many_elements,
    unknown_group
  };

  std::string_view to_string(error_kind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so
  // that callers (notably the CLI) can map it onto a stable exit code.
  class Error : public std::runtime_error {
   public:
    Error(error_kind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] error_kind kind() const noexcept {
      return _kind;
    }

   private:
    error_kind _kind;
  };

}  // namespace stallings

#endif  // STALLINGS_ERROR_HPP_
