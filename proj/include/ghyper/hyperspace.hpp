#ifndef GHYPER_HYPERSPACE_HPP_
#define GHYPER_HYPERSPACE_HPP_

#include <algorithm>   // for equal
#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for hash
#include <initializer_list>
#include <span>        // for span
#include <string>      // for string, to_string
#include <vector>      // for vector

#include "bits.hpp"      // for SubsetMask, detail::Words
#include "errors.hpp"    // for InputError, SizeLimitError
#include "groupoid.hpp"  // for Groupoid

namespace ghyper {

  class Hyperspace;

  namespace detail {
    Hyperspace make_hyperspace(std::size_t n, Words words) noexcept;
  }

  //! An inclusion hyperspace on {0, ..., n-1}: a non-empty upward-closed
  //! family of non-empty subsets, stored as its 2^n-bit membership vector
  //! (bit A set iff the subset with mask A belongs to the family).
  //!
  //! Equality, hashing and ordering all use the membership vector; the order
  //! is the numeric order of that vector read as a 2^n-bit integer.
  class Hyperspace {
   public:
    //! Validates: correct length, no empty set, X present, upward closed.
    Hyperspace(std::size_t n, std::span<std::uint64_t const> words);

    [[nodiscard]] std::size_t carrier_size() const noexcept {
      return _n;
    }
    [[nodiscard]] bool contains(SubsetMask a) const noexcept {
      return detail::test(_words, a.bits());
    }
    //! Number of member sets.
    [[nodiscard]] std::size_t size() const noexcept {
      return detail::count(_words);
    }
    [[nodiscard]] std::span<std::uint64_t const> words() const noexcept {
      return _words;
    }

    friend bool operator==(Hyperspace const& a, Hyperspace const& b) noexcept {
      return a._n == b._n && a._words == b._words;
    }

    friend std::strong_ordering operator<=>(Hyperspace const& a,
                                            Hyperspace const& b) noexcept {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      for (std::size_t j = a._words.size(); j-- > 0;) {
        if (auto c = a._words[j] <=> b._words[j]; c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

   private:
    Hyperspace() = default;
    friend Hyperspace detail::make_hyperspace(std::size_t, detail::Words) noexcept;

    std::size_t   _n = 0;
    detail::Words _words;
  };

  struct HyperspaceHash {
    std::size_t operator()(Hyperspace const& h) const noexcept {
      std::uint64_t x = h.carrier_size();
      for (auto w : h.words()) {
        x ^= w + 0x9e37'79b9'7f4a'7c15ULL + (x << 6) + (x >> 2);
      }
      return std::hash<std::uint64_t>{}(x);
    }
  };

  namespace detail {
    inline Hyperspace make_hyperspace(std::size_t n, Words words) noexcept {
      Hyperspace h;
      h._n     = n;
      h._words = std::move(words);
      return h;
    }

    inline void check_carrier(std::size_t n) {
      if (n == 0) {
        throw InputError("carrier must be non-empty");
      }
      if (n > max_carrier) {
        throw SizeLimitError("carrier of size " + std::to_string(n)
                             + " exceeds the limit of "
                             + std::to_string(max_carrier));
      }
    }

    inline void check_same_carrier(Hyperspace const& a, Hyperspace const& b) {
      if (a.carrier_size() != b.carrier_size()) {
        throw InputError("carrier mismatch: " + std::to_string(a.carrier_size())
                         + " vs " + std::to_string(b.carrier_size()));
      }
    }

    inline Words zero_words(std::size_t n) {
      return Words(word_count(n), 0);
    }
  }  // namespace detail

  inline Hyperspace::Hyperspace(std::size_t n, std::span<std::uint64_t const> words) {
    detail::check_carrier(n);
    if (words.size() != detail::word_count(n)) {
      throw InputError("membership vector has wrong length");
    }
    if ((words.back() & ~detail::tail_mask(n)) != 0) {
      throw InputError("membership vector has bits beyond 2^n");
    }
    if (detail::test(words, 0)) {
      throw InputError("an inclusion hyperspace cannot contain the empty set");
    }
    if (!detail::test(words, SubsetMask::full(n).bits())) {
      throw InputError("an inclusion hyperspace must contain the full carrier");
    }
    detail::Words closed(words.begin(), words.end());
    detail::upclose(closed, n);
    if (!std::equal(closed.begin(), closed.end(), words.begin())) {
      throw InputError("family is not upward closed");
    }
    _n     = n;
    _words = std::move(closed);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  //! <B>: every subset containing some base set.
  inline Hyperspace generate(std::size_t n, std::span<SubsetMask const> base) {
    detail::check_carrier(n);
    if (base.empty()) {
      throw InputError("generate: base must not be empty");
    }
    auto words = detail::zero_words(n);
    for (auto b : base) {
      if (b.empty()) {
        throw InputError("generate: base sets must be non-empty");
      }
      if (!b.is_subset_of(SubsetMask::full(n))) {
        throw InputError("generate: base set outside the carrier");
      }
      detail::set(words, b.bits());
    }
    detail::upclose(words, n);
    return detail::make_hyperspace(n, std::move(words));
  }

  inline Hyperspace generate(Groupoid const& g, std::span<SubsetMask const> base) {
    return generate(g.size(), base);
  }

  inline Hyperspace generate(std::size_t n, std::initializer_list<SubsetMask> base) {
    return generate(n, std::span<SubsetMask const>(base.begin(), base.size()));
  }

  //! <{x}>, all subsets containing x.
  inline Hyperspace principal(std::size_t n, std::size_t x) {
    if (x >= n) {
      throw InputError("principal: element " + std::to_string(x)
                       + " out of range");
    }
    return generate(n, {SubsetMask::singleton(x)});
  }

  inline Hyperspace principal(Groupoid const& g, std::size_t x) {
    return principal(g.size(), x);
  }

  //! min G(X) = {X}
  inline Hyperspace minimum(std::size_t n) {
    return generate(n, {SubsetMask::full(n)});
  }

  //! max G(X) = all non-empty subsets
  inline Hyperspace maximum(std::size_t n) {
    detail::check_carrier(n);
    auto words = detail::zero_words(n);
    for (auto& w : words) {
      w = ~std::uint64_t{0};
    }
    words.back() &= detail::tail_mask(n);
    detail::reset(words, 0);
    return detail::make_hyperspace(n, std::move(words));
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice structure
  ////////////////////////////////////////////////////////////////////////

  enum class LatticeOp { meet, join };

  //! meet = intersection of families, join = union of families.
  inline Hyperspace lattice_combine(LatticeOp op, Hyperspace const& u, Hyperspace const& v) {
    detail::check_same_carrier(u, v);
    detail::Words out(u.words().begin(), u.words().end());
    auto          vw = v.words();
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = op == LatticeOp::meet ? (out[j] & vw[j]) : (out[j] | vw[j]);
    }
    return detail::make_hyperspace(u.carrier_size(), std::move(out));
  }

  inline Hyperspace meet(Hyperspace const& u, Hyperspace const& v) {
    return lattice_combine(LatticeOp::meet, u, v);
  }

  inline Hyperspace join(Hyperspace const& u, Hyperspace const& v) {
    return lattice_combine(LatticeOp::join, u, v);
  }

  //! F^perp = {E : E meets every member of F}.  E misses some member iff its
  //! complement contains one, i.e. iff X \ E is in F.
  inline Hyperspace transversal(Hyperspace const& f) {
    auto const n     = f.carrier_size();
    auto const full  = SubsetMask::full(n).bits();
    auto       words = detail::zero_words(n);
    for (std::uint32_t e = 1; e <= full; ++e) {
      if (!detail::test(f.words(), full ^ e)) {
        detail::set(words, e);
      }
    }
    return detail::make_hyperspace(n, std::move(words));
  }

  //! The inclusion-minimal members, ascending by mask value.
  inline std::vector<SubsetMask> minimal_sets(Hyperspace const& f) {
    std::vector<SubsetMask> out;
    auto const              mins = detail::minimal(f.words(), f.carrier_size());
    detail::for_each_set(mins, [&](std::uint32_t a) { out.emplace_back(a); });
    return out;
  }

  //! On a finite discrete carrier F lives in G(A) iff every minimal set of F
  //! lies inside A, so the support is the union of the minimal sets.
  inline SubsetMask support(Hyperspace const& f) {
    SubsetMask s;
    for (auto a : minimal_sets(f)) {
      s = s | a;
    }
    return s;
  }

  inline bool is_principal(Hyperspace const& f) {
    auto const m = minimal_sets(f);
    return m.size() == 1 && m.front().size() == 1;
  }

}  // namespace ghyper

#endif  // GHYPER_HYPERSPACE_HPP_
