// Building a FinSSet from a presheaf given by enumeration and action.
//
// Several constructions (homotopy-coherent nerves, slices) naturally produce
// all k-simplices as opaque keys together with the action of monotone maps.
// build_presheaf turns such data into a FinSSet by locating the
// nondegenerate keys and their normalized faces.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qckit/sset.hpp"

namespace qckit {

template <class Key>
struct PresheafModel {
  SSetPtr sset;
  /// Key of every nondegenerate cell, indexed by CellId.
  std::vector<Key> cell_keys;
  std::map<Key, CellId> key_to_cell;
};

/// `enumerate(k)` lists every k-simplex (degenerate ones included);
/// `act(key, alpha)` is alpha^* key for alpha: [m] -> [k]; `name(key, k, idx)`
/// names a nondegenerate cell.
template <class Key, class Enumerate, class Act, class Name>
class PresheafBuilder {
 public:
  PresheafBuilder(int max_dim, Enumerate enumerate, Act act, Name name)
      : max_dim_(max_dim), enumerate_(std::move(enumerate)), act_(std::move(act)), name_(std::move(name)) {}

  /// The epi of the Eilenberg-Zilber decomposition of x: [k] ->> [m] collapses
  /// i, i+1 exactly when x = s_i d_i x.
  MonotoneMap degeneracy_epi(const Key& x, int k) const {
    std::vector<int> v{0};
    for (int i = 0; i < k; ++i) {
      const Key down = act_(x, face_generator(k, i));
      const bool collapsed = act_(down, degeneracy_generator(k - 1, i)) == x;
      v.push_back(v.back() + (collapsed ? 0 : 1));
    }
    return MonotoneMap(v.back(), v);
  }

  PresheafModel<Key> build() {
    PresheafModel<Key> model;
    FinSSetBuilder builder(max_dim_);
    for (int k = 0; k <= max_dim_; ++k) {
      int idx = 0;
      for (const Key& x : enumerate_(k)) {
        if (!degeneracy_epi(x, k).is_identity()) continue;
        std::vector<SimplexRef> faces;
        if (k == 0) {
          faces.push_back({});
        } else {
          for (int i = 0; i <= k; ++i) faces.push_back(normalize(model, act_(x, face_generator(k, i)), k - 1));
        }
        const CellId c = builder.add_cell(name_(x, k, idx++), std::move(faces));
        model.cell_keys.push_back(x);
        model.key_to_cell.emplace(x, c);
      }
    }
    model.sset = std::make_shared<const FinSSet>(std::move(builder).build());
    return model;
  }

  SimplexRef normalize(const PresheafModel<Key>& model, const Key& x, int k) const {
    const MonotoneMap epi = degeneracy_epi(x, k);
    const Key base = act_(x, least_section(epi));
    auto it = model.key_to_cell.find(base);
    if (it == model.key_to_cell.end()) throw ValidationError("presheaf is not closed under faces");
    return {epi, it->second};
  }

 private:
  int max_dim_;
  Enumerate enumerate_;
  Act act_;
  Name name_;
};

template <class Key, class Enumerate, class Act, class Name>
PresheafModel<Key> build_presheaf(int max_dim, Enumerate enumerate, Act act, Name name) {
  return PresheafBuilder<Key, Enumerate, Act, Name>(max_dim, std::move(enumerate), std::move(act), std::move(name))
      .build();
}

}  // namespace qckit
