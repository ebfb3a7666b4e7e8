#include "qckit/ordinal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qckit {

MonotoneMap::MonotoneMap(int target_arity, std::span<const int> values) {
  if (values.empty() || values.size() > kMaxArity + 1 || target_arity < 0 ||
      target_arity > kMaxArity) {
    throw IndexError("monotone map arity out of range");
  }
  size_ = static_cast<std::uint8_t>(values.size());
  target_ = static_cast<std::uint8_t>(target_arity);
  int prev = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < prev || v > target_arity) {
      throw IndexError("sequence is not a monotone map into [" + std::to_string(target_arity) +
                       "]");
    }
    values_[i] = static_cast<std::uint8_t>(v);
    prev = v;
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return MonotoneMap(n, v);
}

MonotoneMap MonotoneMap::constant(int source_arity, int target_arity, int value) {
  std::vector<int> v(static_cast<std::size_t>(source_arity + 1), value);
  return MonotoneMap(target_arity, v);
}

std::vector<int> MonotoneMap::values() const {
  return std::vector<int>(values_.begin(), values_.begin() + size_);
}

bool MonotoneMap::is_injective() const {
  for (int i = 1; i < size_; ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (values_[0] != 0 || values_[size_ - 1] != target_) return false;
  for (int i = 1; i < size_; ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool MonotoneMap::is_identity() const {
  if (size_ != target_ + 1) return false;
  for (int i = 0; i < size_; ++i)
    if (values_[i] != i) return false;
  return true;
}

std::vector<int> MonotoneMap::image() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (out.empty() || out.back() != values_[i]) out.push_back(values_[i]);
  return out;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size_; ++i) os << (i ? "," : "") << int(values_[i]);
  os << "]->[" << int(target_) << ']';
  return os.str();
}

std::size_t MonotoneMap::hash() const {
  std::size_t h = target_;
  for (int i = 0; i < size_; ++i) h = h * 31 + values_[i] + 1;
  return h;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target_arity() != g.source_arity()) {
    throw CompositionError("cannot compose " + g.to_string() + " after " + f.to_string());
  }
  std::array<int, kMaxArity + 1> v{};
  for (int i = 0; i <= f.source_arity(); ++i) v[static_cast<std::size_t>(i)] = g(f(i));
  return MonotoneMap(g.target_arity(),
                     std::span<const int>(v.data(), static_cast<std::size_t>(f.source_arity() + 1)));
}

MonotoneMap face_generator(int n, int i) {
  if (n < 1 || i < 0 || i > n) {
    throw IndexError("face generator index " + std::to_string(i) + " out of range for [" +
                     std::to_string(n) + "]");
  }
  std::vector<int> v;
  for (int j = 0; j <= n; ++j)
    if (j != i) v.push_back(j);
  return MonotoneMap(n, v);
}

MonotoneMap degeneracy_generator(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw IndexError("degeneracy generator index " + std::to_string(i) + " out of range for [" +
                     std::to_string(n) + "]");
  }
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return MonotoneMap(n, v);
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
  const std::vector<int> img = f.image();
  const int p = static_cast<int>(img.size()) - 1;
  std::vector<int> epi;
  int idx = 0;
  for (int i = 0; i <= f.source_arity(); ++i) {
    while (img[static_cast<std::size_t>(idx)] != f(i)) ++idx;
    epi.push_back(idx);
  }
  return {MonotoneMap(p, epi), MonotoneMap(f.target_arity(), img)};
}

MonotoneMap Generator::map() const {
  return kind == Kind::face ? face_generator(n, i) : degeneracy_generator(n, i);
}

std::vector<Generator> generator_word(const MonotoneMap& f) {
  auto [epi, mono] = epi_mono_factor(f);
  std::vector<Generator> word;

  // mono = d_{c_s} o ... o d_{c_1} for missing values c_1 < ... < c_s.
  std::vector<int> img = mono.image();
  int n = mono.target_arity();
  std::vector<int> missing;
  for (int v = 0, k = 0; v <= n; ++v) {
    if (k < static_cast<int>(img.size()) && img[static_cast<std::size_t>(k)] == v)
      ++k;
    else
      missing.push_back(v);
  }
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
    word.push_back({Generator::Kind::face, n, *it});
    --n;
  }

  // epi = s_{j_1} o ... o s_{j_t} with j_1 < ... < j_t the collapsed positions
  // read off after removing earlier collapses.
  std::vector<int> rep;
  int removed = 0;
  for (int j = 0; j < epi.source_arity(); ++j) {
    if (epi(j) == epi(j + 1)) {
      rep.push_back(j - removed);
      ++removed;
    }
  }
  int m = epi.target_arity();
  for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
    word.push_back({Generator::Kind::degeneracy, m, *it});
    ++m;
  }
  return word;
}

MonotoneMap compose_word(std::span<const Generator> word, int source_arity) {
  MonotoneMap acc = MonotoneMap::identity(source_arity);
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = compose(it->map(), acc);
  return acc;
}

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > m) {
      out.emplace_back(n, v);
      return;
    }
    for (int x = lo; x <= n; ++x) {
      v[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<MonotoneMap> all_surjections(int m, int n) {
  std::vector<MonotoneMap> out;
  for (auto& f : all_monotone_maps(m, n))
    if (f.is_surjective()) out.push_back(f);
  return out;
}

std::vector<MonotoneMap> all_injections(int m, int n) {
  std::vector<MonotoneMap> out;
  for (auto& f : all_monotone_maps(m, n))
    if (f.is_injective()) out.push_back(f);
  return out;
}

MonotoneMap least_section(const MonotoneMap& epi) {
  std::vector<int> v;
  for (int i = 0; i <= epi.source_arity(); ++i)
    if (i == 0 || epi(i) != epi(i - 1)) v.push_back(i);
  return MonotoneMap(epi.source_arity(), v);
}

}  // namespace qckit
