// The simplex category: finite ordinals [n] = {0,...,n} and monotone maps
// between them.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qckit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Largest source/target arity a MonotoneMap can hold.
inline constexpr int kMaxArity = 15;

/// A weakly increasing map [m] -> [n], stored by its value sequence.
///
/// Values are immutable after construction; two maps are equal iff their
/// arities and value sequences agree.
class MonotoneMap {
 public:
  /// The identity of [0].
  MonotoneMap() = default;
  /// Throws IndexError if `values` is empty, not weakly increasing, or leaves
  /// {0,...,target_arity}.
  MonotoneMap(int target_arity, std::span<const int> values);
  MonotoneMap(int target_arity, std::initializer_list<int> values)
      : MonotoneMap(target_arity, std::span<const int>(values.begin(), values.size())) {}

  static MonotoneMap identity(int n);
  static MonotoneMap constant(int source_arity, int target_arity, int value);

  int source_arity() const { return size_ - 1; }
  int target_arity() const { return target_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::vector<int> values() const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  /// The image as a strictly increasing sequence.
  std::vector<int> image() const;

  std::string to_string() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

  std::size_t hash() const;

 private:
  std::uint8_t size_{1};
  std::uint8_t target_{0};
  std::array<std::uint8_t, kMaxArity + 1> values_{};
};

/// g o f. Throws CompositionError when f's target is not g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// The coface [n-1] -> [n] skipping i.
MonotoneMap face_generator(int n, int i);
/// The codegeneracy [n+1] -> [n] repeating i.
MonotoneMap degeneracy_generator(int n, int i);

struct EpiMono {
  MonotoneMap epi;
  MonotoneMap mono;
};

/// The unique factorization f = mono o epi with epi surjective, mono injective.
EpiMono epi_mono_factor(const MonotoneMap& f);

/// A single generator of the simplex category.
struct Generator {
  enum class Kind { face, degeneracy };
  Kind kind;
  int n;  // arity of the larger ordinal: face is [n-1]->[n], degeneracy [n+1]->[n]
  int i;
  MonotoneMap map() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Writes f as a composite of generators. The returned word is applied right
/// to left: f = word[0] o word[1] o ... o word.back(). The identity yields an
/// empty word.
std::vector<Generator> generator_word(const MonotoneMap& f);
/// Composes a word produced by generator_word; `source_arity` is needed for
/// the empty word.
MonotoneMap compose_word(std::span<const Generator> word, int source_arity);

/// Every monotone map [m] -> [n], in lexicographic order of value sequences.
std::vector<MonotoneMap> all_monotone_maps(int m, int n);
std::vector<MonotoneMap> all_surjections(int m, int n);
std::vector<MonotoneMap> all_injections(int m, int n);

/// A section of a surjection picking the least element of each fibre.
MonotoneMap least_section(const MonotoneMap& epi);

}  // namespace qckit

template <>
struct std::hash<qckit::MonotoneMap> {
  std::size_t operator()(const qckit::MonotoneMap& f) const noexcept { return f.hash(); }
};
