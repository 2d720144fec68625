#include "stallings/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "stallings/error.hpp"

namespace stallings {

  std::string_view to_string(error_kind kind) noexcept {
    switch (kind) {
      case error_kind::parse_error: return "ParseError";
      case error_kind::relator_trivial: return "RelatorTrivial";
      case error_kind::not_dehn_presentation: return "NotDehnPresentation";
      case error_kind::alphabet_mismatch: return "AlphabetMismatch";
      case error_kind::no_multiplier: return "NoMultiplier";
      case error_kind::internal_inconsistency: return "InternalInconsistency";
      case error_kind::invalid_constant: return "InvalidConstant";
      case error_kind::certification_regression:
        return "CertificationRegression";
      case error_kind::inverse_closure_required:
        return "InverseClosureRequired";
      case error_kind::flag_required: return "FlagRequired";
      case error_kind::structure_mismatch: return "StructureMismatch";
      case error_kind::k_must_be_infinite: return "KMustBeInfinite";
      case error_kind::budget_exhausted: return "BudgetExhausted";
      case error_kind::too_many_elements: return "TooManyElements";
      case error_kind::unknown_group: return "UnknownGroup";
    }
    return "Unknown";
  }

  Alphabet::Alphabet(std::vector<std::string> generators)
      : _generators(std::move(generators)) {
    if (_generators.empty()) {
      throw Error(error_kind::parse_error, "an alphabet needs a generator");
    }
    std::set<std::string> seen;
    for (auto const& g : _generators) {
      bool bad = g.empty() || g == "_" || g == "1";
      for (char c : g) {
        bad = bad || std::isspace(static_cast<unsigned char>(c)) || c == '\'';
      }
      if (bad) {
        throw Error(error_kind::parse_error, "invalid generator name '" + g + "'");
      }
      if (!seen.insert(g).second) {
        throw Error(error_kind::parse_error, "duplicate generator '" + g + "'");
      }
    }
  }

  std::string Alphabet::name(letter_type x) const {
    if (x == padding()) {
      return "_";
    }
    if (x >= size()) {
      throw Error(error_kind::parse_error,
                  "letter " + std::to_string(x) + " out of range");
    }
    return x < rank() ? _generators[x] : _generators[x - rank()] + "'";
  }

  letter_type Alphabet::letter(std::string_view token) const {
    bool inverse = false;
    if (!token.empty() && token.back() == '\'') {
      inverse = true;
      token.remove_suffix(1);
    }
    auto it = std::find(_generators.begin(), _generators.end(), token);
    if (it == _generators.end()) {
      throw Error(error_kind::parse_error,
                  "unknown letter '" + std::string(token) + "'");
    }
    auto x = static_cast<letter_type>(it - _generators.begin());
    return inverse ? inverse_letter(x, rank()) : x;
  }

  word_type Alphabet::parse(std::string_view text) const {
    word_type   result;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size()
             && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size()
             && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j > i) {
        result.push_back(letter(text.substr(i, j - i)));
      }
      i = j;
    }
    return result;
  }

  std::string Alphabet::format(word_type const& w) const {
    std::string result;
    for (auto x : w) {
      if (!result.empty()) {
        result += ' ';
      }
      result += name(x);
    }
    return result;
  }

  word_type free_reduce(word_type const& w, std::size_t rank) {
    word_type result;
    result.reserve(w.size());
    for (auto x : w) {
      if (!result.empty() && result.back() == inverse_letter(x, rank)) {
        result.pop_back();
      } else {
        result.push_back(x);
      }
    }
    return result;
  }

  bool is_freely_reduced(word_type const& w, std::size_t rank) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == inverse_letter(w[i - 1], rank)) {
        return false;
      }
    }
    return true;
  }

  word_type inverse_word(word_type const& w, std::size_t rank) {
    word_type result(w.rbegin(), w.rend());
    for (auto& x : result) {
      x = inverse_letter(x, rank);
    }
    return result;
  }

  word_type concat(word_type const& u, word_type const& v) {
    word_type result(u);
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  word_type cyclically_reduce(word_type const& w, std::size_t rank) {
    word_type   r     = free_reduce(w, rank);
    std::size_t first = 0;
    std::size_t last  = r.size();
    while (last - first >= 2 && r[last - 1] == inverse_letter(r[first], rank)) {
      ++first;
      --last;
    }
    return word_type(r.begin() + first, r.begin() + last);
  }

  bool shortlex_less(word_type const& u, word_type const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

}  // namespace stallings
