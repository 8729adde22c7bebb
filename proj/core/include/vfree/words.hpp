#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vfree/errors.hpp"

namespace vfree {

// A letter is an index into its alphabet.  Letters are opaque identifiers
// (arbitrary strings such as "ta" or "t1.a"), never single characters.
using letter = int;

// A word is a finite sequence of letters over one alphabet.  The empty
// word is the identity representative everywhere; no sentinel.
using word = std::vector<letter>;

// An alphabet closed under formal inversion.  Letter order is fixed at
// creation and anchors ShortLex.  Self-inverse letters are allowed
// (order-2 group elements).
class alphabet {
 public:
  // Adds a letter paired with itself.  Returns its index.
  letter add_involution(std::string name);

  // Adds two mutually inverse letters; returns the index of the first.
  letter add_pair(std::string name, std::string inverse_name);

  // Declares two existing letters mutually inverse.  Both must still be
  // self-paired (pairing is set once).
  void pair(letter x, letter y);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(letter x) const { return names_.at(x); }
  letter inverse(letter x) const { return inv_.at(x); }
  std::optional<letter> find(std::string_view name) const;

  // inv is an involution over all letters.
  bool well_formed() const;

 private:
  letter add_one(std::string name);

  std::vector<std::string> names_;
  std::vector<letter> inv_;
  std::unordered_map<std::string, letter> index_;
};

// Reverse of w with each letter replaced by its formal inverse.
word formal_inverse(const alphabet& a, const word& w);

// All contiguous substrings of w of length 1..max_len, in left-to-right
// order of start position (all length-1 factors first, then length-2, ...).
std::vector<word> subwords(const word& w, int max_len);

// Shorter word first; equal lengths compared lexicographically by the
// alphabet's fixed letter order (letter indices).
std::strong_ordering shortlex_compare(const word& u, const word& v);

struct shortlex_less {
  bool operator()(const word& u, const word& v) const {
    return shortlex_compare(u, v) == std::strong_ordering::less;
  }
};

// Word syntax for the CLI and files: whitespace-separated letter
// identifiers; the empty string denotes the empty word.
word parse_word(const alphabet& a, std::string_view text);
std::string format_word(const alphabet& a, const word& w);

}  // namespace vfree
