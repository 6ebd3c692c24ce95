#ifndef GHYPER_PRODUCT_HPP_
#define GHYPER_PRODUCT_HPP_

#include <algorithm>  // for fill
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <span>     // for span
#include <string>   // for to_string
#include <utility>  // for swap
#include <vector>   // for vector

#include "bits.hpp"        // for SubsetMask, detail::Words
#include "errors.hpp"      // for InputError
#include "groupoid.hpp"    // for Groupoid
#include "hyperspace.hpp"  // for Hyperspace, minimal_sets

namespace ghyper {

  namespace detail {
    inline void check_element(Groupoid const& g, std::size_t x) {
      if (x >= g.size()) {
        throw InputError("element index " + std::to_string(x)
                         + " out of range for a carrier of size "
                         + std::to_string(g.size()));
      }
    }

    inline void check_carrier(Groupoid const& g, Hyperspace const& f) {
      if (f.carrier_size() != g.size()) {
        throw InputError("hyperspace carrier (" + std::to_string(f.carrier_size())
                         + ") does not match groupoid size ("
                         + std::to_string(g.size()) + ")");
      }
    }
  }  // namespace detail

  //! x^{-1}A = {y : x * y in A}; may be empty.
  inline SubsetMask preimage_shift(Groupoid const& g, std::size_t x, SubsetMask a) {
    detail::check_element(g, x);
    return g.preimage(x, a & SubsetMask::full(g.size()));
  }

  //! x * A = {x * y : y in A}
  inline SubsetMask image_shift(Groupoid const& g, std::size_t x, SubsetMask a) {
    detail::check_element(g, x);
    return g.image(x, a & SubsetMask::full(g.size()));
  }

  //! a * F, generated by {a * F : F in F}.
  inline Hyperspace left_shift(Groupoid const& g, std::size_t a, Hyperspace const& f) {
    detail::check_element(g, a);
    detail::check_carrier(g, f);
    auto words = detail::zero_words(g.size());
    for (auto m : minimal_sets(f)) {
      detail::set(words, g.image(a, m).bits());
    }
    detail::upclose(words, g.size());
    return detail::make_hyperspace(g.size(), std::move(words));
  }

  namespace detail {
    // For every subset A, the set {x : x^{-1}A in V}.  Depends on V only,
    // so one profile serves every left factor.
    inline std::vector<std::uint32_t> preimage_profile(Groupoid const& g, Hyperspace const& v) {
      auto const                 n    = g.size();
      auto const                 full = SubsetMask::full(n).bits();
      auto const                 vw   = v.words();
      std::vector<std::uint32_t> hits(std::size_t{full} + 1, 0);
      for (std::uint32_t a = 1; a <= full; ++a) {
        for (std::size_t x = 0; x < n; ++x) {
          if (test(vw, g.preimage(x, SubsetMask(a)).bits())) {
            hits[a] |= std::uint32_t{1} << x;
          }
        }
      }
      return hits;
    }

    inline Hyperspace apply_profile(std::size_t                     n,
                                    Hyperspace const&               u,
                                    std::span<std::uint32_t const> hits) {
      auto const uw    = u.words();
      auto       words = zero_words(n);
      for (std::uint32_t a = 1; a < hits.size(); ++a) {
        if (test(uw, hits[a])) {
          set(words, a);
        }
      }
      return make_hyperspace(n, std::move(words));
    }
  }  // namespace detail

  //! U o V = {A : {x : x^{-1}A in V} in U}.
  inline Hyperspace product(Groupoid const& g, Hyperspace const& u, Hyperspace const& v) {
    detail::check_carrier(g, u);
    detail::check_carrier(g, v);
    return detail::apply_profile(g.size(), u, detail::preimage_profile(g, v));
  }

  //! U o V through its base: the up-closure of all unions
  //! U_{x in U} x * V_x, U a minimal set of U, each V_x a minimal set of V
  //! chosen independently.  The unions are built one point of U at a time,
  //! keeping the set of distinct partial unions.
  inline Hyperspace product_via_base(Groupoid const&   g,
                                     Hyperspace const& u,
                                     Hyperspace const& v) {
    detail::check_carrier(g, u);
    detail::check_carrier(g, v);
    auto const n      = g.size();
    auto const v_mins = minimal_sets(v);
    auto       base   = detail::zero_words(n);
    auto       reach  = detail::zero_words(n);
    auto       next   = detail::zero_words(n);
    for (auto um : minimal_sets(u)) {
      std::fill(reach.begin(), reach.end(), 0);
      detail::set(reach, 0);
      for (auto x : um.elements()) {
        std::fill(next.begin(), next.end(), 0);
        detail::for_each_set(reach, [&](std::uint32_t partial) {
          for (auto vm : v_mins) {
            detail::set(next, partial | g.image(x, vm).bits());
          }
        });
        std::swap(reach, next);
      }
      for (std::size_t j = 0; j < base.size(); ++j) {
        base[j] |= reach[j];
      }
    }
    detail::upclose(base, n);
    return detail::make_hyperspace(n, std::move(base));
  }

  //! Gh(F) = <{h(A) : A in F}> for a map h of carriers.
  inline Hyperspace induced_map(std::span<std::size_t const> h,
                                Groupoid const&              from,
                                Groupoid const&              to,
                                Hyperspace const&            f) {
    detail::check_carrier(from, f);
    if (h.size() != from.size()) {
      throw InputError("induced_map: map has length " + std::to_string(h.size())
                       + ", expected " + std::to_string(from.size()));
    }
    for (auto y : h) {
      detail::check_element(to, y);
    }
    auto words = detail::zero_words(to.size());
    for (auto m : minimal_sets(f)) {
      std::uint32_t image = 0;
      for (auto x : m.elements()) {
        image |= std::uint32_t{1} << h[x];
      }
      detail::set(words, image);
    }
    detail::upclose(words, to.size());
    return detail::make_hyperspace(to.size(), std::move(words));
  }

}  // namespace ghyper

#endif  // GHYPER_PRODUCT_HPP_
