#include "qckit/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace qckit {

FinPoset::FinPoset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& leq)
    : names_(std::move(elements)) {
  const int n = size();
  order_.assign(static_cast<std::size_t>(n * n), false);
  auto at = [&](int a, int b) { return order_[static_cast<std::size_t>(a * n + b)]; };
  for (int a = 0; a < n; ++a) at(a, a) = true;
  for (auto [a, b] : leq) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ValidationError("order relation names an unknown element");
    at(a, b) = true;
  }
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      if (at(a, m))
        for (int b = 0; b < n; ++b)
          if (at(m, b)) at(a, b) = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) && at(b, a))
        throw ValidationError("order is not antisymmetric: " + names_[static_cast<std::size_t>(a)] +
                              " and " + names_[static_cast<std::size_t>(b)]);
}

int FinPoset::longest_chain() const {
  const int n = size();
  std::vector<int> memo(static_cast<std::size_t>(n), 0);
  std::function<int(int)> up = [&](int a) {
    auto& m = memo[static_cast<std::size_t>(a)];
    if (m) return m;
    int best = 1;
    for (int b = 0; b < n; ++b)
      if (less(a, b)) best = std::max(best, 1 + up(b));
    return m = best;
  };
  int best = 0;
  for (int a = 0; a < n; ++a) best = std::max(best, up(a));
  return best;
}

std::vector<std::pair<int, int>> FinPoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

PosetNerve::PosetNerve(FinPoset poset, int truncation) : poset_(std::move(poset)) {
  const int trunc = truncation >= 0 ? truncation : std::max(0, poset_.longest_chain() - 1);
  const int n = poset_.size();

  // Strict chains of length d+1, lexicographic within each dimension.
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(trunc + 1));
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    by_dim[chain.size() - 1].push_back(chain);
    if (static_cast<int>(chain.size()) > trunc) return;
    for (int b = 0; b < n; ++b) {
      if (poset_.less(last, b)) {
        chain.push_back(b);
        extend(b);
        chain.pop_back();
      }
    }
  };
  for (int a = 0; a < n; ++a) {
    chain = {a};
    extend(a);
  }

  FinSSetBuilder b(trunc);
  for (int d = 0; d <= trunc; ++d) {
    auto& level = by_dim[static_cast<std::size_t>(d)];
    std::ranges::sort(level);
    for (const auto& ch : level) {
      std::string name;
      for (std::size_t t = 0; t < ch.size(); ++t) name += (t ? "<" : "") + poset_.name(ch[t]);
      std::vector<SimplexRef> faces;
      if (d == 0) faces.push_back({});
      for (int i = 0; d > 0 && i <= d; ++i) {
        auto sub = ch;
        sub.erase(sub.begin() + i);
        faces.push_back({MonotoneMap::identity(d - 1), chain_cell_.at(sub)});
      }
      const CellId c = b.add_cell(name, std::move(faces));
      chain_cell_.emplace(ch, c);
      chains_.push_back(ch);
    }
  }
  sset_ = std::make_shared<const FinSSet>(std::move(b).build());
}

SimplexRef PosetNerve::simplex_of(std::span<const int> weak_chain) const {
  std::vector<int> strict;
  std::vector<int> epi;
  for (int x : weak_chain) {
    if (!strict.empty() && strict.back() == x) {
      epi.push_back(epi.back());
      continue;
    }
    if (!strict.empty() && !poset_.leq(strict.back(), x)) throw ValidationError("sequence is not a chain");
    strict.push_back(x);
    epi.push_back(static_cast<int>(strict.size()) - 1);
  }
  auto it = chain_cell_.find(strict);
  if (it == chain_cell_.end()) throw TruncationError("chain exceeds nerve truncation");
  return {MonotoneMap(static_cast<int>(strict.size()) - 1, epi), it->second};
}

std::vector<int> PosetNerve::elements_of(const SimplexRef& s) const {
  const auto& ch = chain(s.cell);
  std::vector<int> out;
  for (int t = 0; t <= s.dim(); ++t) out.push_back(ch[static_cast<std::size_t>(s.epi(t))]);
  return out;
}

std::string subset_name(Subset s) {
  std::string out;
  for (int b = 0; b < 32; ++b) {
    if (!(s >> b & 1u)) continue;
    if (b >= 10 && !out.empty()) out += ',';
    out += std::to_string(b);
  }
  return out;
}

Subset image_subset(const MonotoneMap& f, Subset s) {
  Subset out = 0;
  for (int b = 0; b <= f.source_arity(); ++b)
    if (s >> b & 1u) out |= 1u << f(b);
  return out;
}

int MappingPoset::index_of(Subset s) const {
  auto it = std::ranges::find(elements, s);
  if (it == elements.end()) throw ValidationError("subset " + subset_name(s) + " is not in P_{i,j}");
  return static_cast<int>(it - elements.begin());
}

FinPoset MappingPoset::poset() const {
  std::vector<std::string> names;
  for (Subset s : elements) names.push_back(subset_name(s));
  std::vector<std::pair<int, int>> leq;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (a != b && (elements[a] & elements[b]) == elements[a])
        leq.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return FinPoset(std::move(names), leq);
}

MappingPoset mapping_poset(int i, int j, int k) {
  if (i < 0 || j < 0 || i > k || j > k || k > 30) throw IndexError("mapping poset indices out of range");
  MappingPoset P{i, j, k, {}};
  if (i > j) return P;
  const Subset ends = (1u << i) | (1u << j);
  const int interior = std::max(0, j - i - 1);
  for (Subset m = 0; m < (1u << interior); ++m) P.elements.push_back(ends | (m << (i + 1)));
  std::ranges::sort(P.elements, [](Subset a, Subset b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  return P;
}

MappingNerve::MappingNerve(int i, int j, int k, int truncation)
    : poset_(qckit::mapping_poset(i, j, k)), nerve_(poset_.poset(), truncation) {}

SimplexRef MappingNerve::simplex_of(std::span<const Subset> weak_chain) const {
  std::vector<int> idx;
  for (Subset s : weak_chain) idx.push_back(poset_.index_of(s));
  return nerve_.simplex_of(idx);
}

std::vector<Subset> MappingNerve::subsets_of(const SimplexRef& s) const {
  std::vector<Subset> out;
  for (int e : nerve_.elements_of(s)) out.push_back(poset_.elements[static_cast<std::size_t>(e)]);
  return out;
}

BilevelMap union_compose(const MappingNerve& jp, const MappingNerve& ij, const MappingNerve& ip) {
  return BilevelMap(jp.sset(), ij.sset(), ip.sset(), [&jp, &ij, &ip](const SimplexRef& a, const SimplexRef& b) {
    const auto J = jp.subsets_of(a);
    const auto I = ij.subsets_of(b);
    std::vector<Subset> U(J.size());
    for (std::size_t t = 0; t < J.size(); ++t) U[t] = J[t] | I[t];
    return ip.simplex_of(U);
  });
}

BilevelMap union_compose(int i, int j, int p, int k) {
  if (!(i <= j && j <= p && p <= k)) throw IndexError("union composition needs i <= j <= p <= k");
  auto jp = std::make_shared<MappingNerve>(j, p, k);
  auto ij = std::make_shared<MappingNerve>(i, j, k);
  auto ip = std::make_shared<MappingNerve>(i, p, k);
  return BilevelMap(jp->sset(), ij->sset(), ip->sset(), [jp, ij, ip](const SimplexRef& a, const SimplexRef& b) {
    const auto J = jp->subsets_of(a);
    const auto I = ij->subsets_of(b);
    std::vector<Subset> U(J.size());
    for (std::size_t t = 0; t < J.size(); ++t) U[t] = J[t] | I[t];
    return ip->simplex_of(U);
  });
}

PosetImage poset_map_image(const MonotoneMap& f, const MappingNerve& source, const MappingNerve& target) {
  const auto& sp = source.mapping_poset();
  const auto& tp = target.mapping_poset();
  if (f.source_arity() != sp.k || f.target_arity() != tp.k || f(sp.i) != tp.i || f(sp.j) != tp.j) {
    throw CompositionError("map does not send P_{i,j} to the given target");
  }
  PosetImage out{{}, SimplicialMap::identity(source.sset())};
  for (Subset s : sp.elements) out.element_map.push_back(tp.index_of(image_subset(f, s)));
  std::vector<SimplexRef> assignment;
  const FinSSet& N = *source.sset();
  for (std::size_t c = 0; c < N.cell_count(); ++c) {
    std::vector<int> img;
    for (int e : source.nerve().chain(static_cast<CellId>(c))) img.push_back(out.element_map[static_cast<std::size_t>(e)]);
    assignment.push_back(target.nerve().simplex_of(img));
  }
  out.nerve_map = SimplicialMap(source.sset(), target.sset(), std::move(assignment));
  return out;
}

PosetImage poset_map_image(const MonotoneMap& f, int i, int j) {
  MappingNerve source(i, j, f.source_arity());
  const int room = std::max(source.sset()->truncation(), std::max(0, f(j) - f(i) - 1));
  MappingNerve target(f(i), f(j), f.target_arity(), room);
  return poset_map_image(f, source, target);
}

}  // namespace qckit
