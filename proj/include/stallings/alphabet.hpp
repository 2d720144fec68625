#ifndef STALLINGS_ALPHABET_HPP_
#define STALLINGS_ALPHABET_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  // Letters of an alphabet of rank r are encoded densely: 0..r-1 are the
  // generators a_1..a_r, r..2r-1 their formal inverses, in that order. The
  // numeric order is the total order used for shortlex comparisons, so for
  // generators {a, b} the order is a < b < a' < b'.
  [[nodiscard]] constexpr letter_type inverse_letter(letter_type x,
                                                     std::size_t rank) noexcept {
    return x < rank ? x + static_cast<letter_type>(rank)
                    : x - static_cast<letter_type>(rank);
  }

  [[nodiscard]] constexpr bool is_positive_letter(letter_type x,
                                                  std::size_t rank) noexcept {
    return x < rank;
  }

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> generators);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _generators.size();
    }
    // Number of letters of the inverse-closed alphabet.
    [[nodiscard]] std::size_t size() const noexcept {
      return 2 * _generators.size();
    }
    // The padding symbol used on the tapes of pair automata; never a letter.
    [[nodiscard]] letter_type padding() const noexcept {
      return static_cast<letter_type>(size());
    }

    [[nodiscard]] letter_type inverse(letter_type x) const noexcept {
      return inverse_letter(x, rank());
    }

    [[nodiscard]] std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }

    // "a" or "a'"; the padding symbol prints as "_".
    [[nodiscard]] std::string name(letter_type x) const;
    [[nodiscard]] letter_type letter(std::string_view token) const;

    // Whitespace separated tokens, inverses marked by a trailing apostrophe.
    // Throws Error(parse_error) on an unknown token.
    [[nodiscard]] word_type parse(std::string_view text) const;
    [[nodiscard]] std::string format(word_type const& w) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> _generators;
  };

  // Free group layer.
  [[nodiscard]] word_type free_reduce(word_type const& w, std::size_t rank);
  [[nodiscard]] bool      is_freely_reduced(word_type const& w,
                                            std::size_t      rank);
  [[nodiscard]] word_type inverse_word(word_type const& w, std::size_t rank);
  [[nodiscard]] word_type concat(word_type const& u, word_type const& v);
  // Free reduction followed by removal of matching first/last letters.
  [[nodiscard]] word_type cyclically_reduce(word_type const& w,
                                            std::size_t      rank);
  // Strict shortlex order with respect to the letter order.
  [[nodiscard]] bool shortlex_less(word_type const& u, word_type const& v);

}  // namespace stallings

#endif  // STALLINGS_ALPHABET_HPP_
