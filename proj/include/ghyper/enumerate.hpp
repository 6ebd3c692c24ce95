#ifndef GHYPER_ENUMERATE_HPP_
#define GHYPER_ENUMERATE_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t, uint64_t
#include <string>   // for to_string
#include <vector>   // for vector

#include "bits.hpp"        // for max_enumeration_carrier
#include "errors.hpp"      // for InputError, SizeLimitError
#include "hyperspace.hpp"  // for Hyperspace

namespace ghyper {

  namespace detail {

    inline void check_enumeration_carrier(std::size_t n) {
      if (n == 0) {
        throw InputError("carrier must be non-empty");
      }
      if (n > max_enumeration_carrier) {
        throw SizeLimitError("enumeration supports carriers of size 1.."
                             + std::to_string(max_enumeration_carrier)
                             + ", got " + std::to_string(n));
      }
    }

    // Subsets are decided from the largest mask downwards.  Every superset of
    // s has a larger mask, so when s is reached its one-point extensions are
    // already decided and s may join the family iff all of them are members.
    // Trying "out" before "in" at each step, most significant bit first,
    // emits the up-sets in ascending numeric order.  Every leaf is an up-set,
    // so there are no dead branches.
    template <typename Admit, typename Visit>
    class UpsetSearch {
     public:
      UpsetSearch(std::size_t n, Admit& admit, Visit& visit)
          : _n(n), _admit(admit), _visit(visit) {
        auto const full = SubsetMask::full(n).bits();
        for (std::uint32_t s = 0; s <= full && s < _extensions.size(); ++s) {
          std::uint64_t ext = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (((s >> i) & 1U) == 0) {
              ext |= std::uint64_t{1} << (s | (std::uint32_t{1} << i));
            }
          }
          _extensions[s] = ext;
        }
      }

      void run() {
        auto const full = SubsetMask::full(_n).bits();
        recurse(full - 1, std::uint64_t{1} << full);
      }

     private:
      void recurse(std::uint32_t s, std::uint64_t family) {
        if (s == 0) {
          _visit(family);
          return;
        }
        recurse(s - 1, family);
        if ((family & _extensions[s]) == _extensions[s] && _admit(s, family)) {
          recurse(s - 1, family | (std::uint64_t{1} << s));
        }
      }

      std::size_t                  _n;
      Admit&                       _admit;
      Visit&                       _visit;
      std::array<std::uint64_t, 64> _extensions{};
    };

    template <typename Admit, typename Visit>
    void search_upsets(std::size_t n, Admit admit, Visit visit) {
      check_enumeration_carrier(n);
      UpsetSearch<Admit, Visit>(n, admit, visit).run();
    }

    inline Hyperspace from_word(std::size_t n, std::uint64_t word) {
      return make_hyperspace(n, Words(1, word));
    }

  }  // namespace detail

  //! Calls visit(Hyperspace const&) for every element of G(X), |X| = n, in
  //! ascending membership-vector order.
  template <typename Visit>
  void for_each_hyperspace(std::size_t n, Visit&& visit) {
    detail::search_upsets(
        n,
        [](std::uint32_t, std::uint64_t) { return true; },
        [&](std::uint64_t w) { visit(detail::from_word(n, w)); });
  }

  //! Every 2-linked hyperspace (no member disjoint from another), ascending.
  //! Two members are disjoint iff one lies inside the complement of the
  //! other, so it suffices that no set and its complement are both members.
  template <typename Visit>
  void for_each_linked_hyperspace(std::size_t n, Visit&& visit) {
    detail::check_enumeration_carrier(n);
    auto const full = SubsetMask::full(n).bits();
    detail::search_upsets(
        n,
        [full](std::uint32_t s, std::uint64_t family) {
          return ((family >> (full ^ s)) & 1U) == 0;
        },
        [&](std::uint64_t w) { visit(detail::from_word(n, w)); });
  }

  inline std::vector<Hyperspace> enumerate_all(std::size_t n) {
    std::vector<Hyperspace> out;
    for_each_hyperspace(n, [&](Hyperspace const& h) { out.push_back(h); });
    return out;
  }

  inline std::uint64_t count_hyperspaces(std::size_t n) {
    std::uint64_t c = 0;
    detail::search_upsets(
        n, [](std::uint32_t, std::uint64_t) { return true; }, [&](std::uint64_t) { ++c; });
    return c;
  }

}  // namespace ghyper

#endif  // GHYPER_ENUMERATE_HPP_
