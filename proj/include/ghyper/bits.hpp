#ifndef GHYPER_BITS_HPP_
#define GHYPER_BITS_HPP_

#include <bit>      // for popcount, countr_zero
#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t, uint64_t
#include <span>     // for span
#include <vector>   // for vector

#include <boost/container/small_vector.hpp>

namespace ghyper {

  //! Largest carrier accepted by single-hyperspace operations.
  inline constexpr std::size_t max_carrier = 16;
  //! Largest carrier for which all of G(X) may be enumerated.
  inline constexpr std::size_t max_enumeration_carrier = 6;

  //! A subset of a carrier {0, ..., n-1}; bit i set iff element i is present.
  class SubsetMask {
   public:
    using value_type = std::uint32_t;

    constexpr SubsetMask() noexcept = default;
    constexpr explicit SubsetMask(value_type bits) noexcept : _bits(bits) {}

    static constexpr SubsetMask singleton(std::size_t i) noexcept {
      return SubsetMask(value_type{1} << i);
    }
    static constexpr SubsetMask full(std::size_t n) noexcept {
      return SubsetMask(static_cast<value_type>((std::uint64_t{1} << n) - 1));
    }

    [[nodiscard]] constexpr value_type bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] constexpr bool contains(std::size_t i) const noexcept {
      return (_bits >> i) & 1U;
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    [[nodiscard]] constexpr bool is_subset_of(SubsetMask other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    [[nodiscard]] constexpr bool intersects(SubsetMask other) const noexcept {
      return (_bits & other._bits) != 0;
    }
    [[nodiscard]] constexpr SubsetMask complement(std::size_t n) const noexcept {
      return SubsetMask(full(n)._bits & ~_bits);
    }

    //! Element indices in increasing order.
    [[nodiscard]] std::vector<std::size_t> elements() const {
      std::vector<std::size_t> out;
      for (value_type b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
      }
      return out;
    }

    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
      return SubsetMask(a._bits | b._bits);
    }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
      return SubsetMask(a._bits & b._bits);
    }
    friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(SubsetMask,
                                                      SubsetMask) noexcept
        = default;

   private:
    value_type _bits = 0;
  };

  namespace detail {

    // Storage for a 2^n-bit family vector; one inline word covers n <= 6.
    class Words : public boost::container::small_vector<std::uint64_t, 1> {
      using base = boost::container::small_vector<std::uint64_t, 1>;

     public:
      using base::base;

      operator std::span<std::uint64_t>() noexcept {
        return {data(), size()};
      }
      operator std::span<std::uint64_t const>() const noexcept {
        return {data(), size()};
      }

      friend bool operator==(Words const& a, Words const& b) noexcept {
        return static_cast<base const&>(a) == static_cast<base const&>(b);
      }
    };

    // Word patterns selecting the positions whose subset index has bit i set.
    inline constexpr std::uint64_t has_bit[6] = {0xAAAA'AAAA'AAAA'AAAAULL,
                                                 0xCCCC'CCCC'CCCC'CCCCULL,
                                                 0xF0F0'F0F0'F0F0'F0F0ULL,
                                                 0xFF00'FF00'FF00'FF00ULL,
                                                 0xFFFF'0000'FFFF'0000ULL,
                                                 0xFFFF'FFFF'0000'0000ULL};

    constexpr std::size_t word_count(std::size_t n) noexcept {
      return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
    }

    // Valid positions of the last (only, when n <= 6) word.
    constexpr std::uint64_t tail_mask(std::size_t n) noexcept {
      return n >= 6 ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << (std::size_t{1} << n)) - 1;
    }

    inline bool test(std::span<std::uint64_t const> w,
                     std::uint32_t             index) noexcept {
      return (w[index >> 6] >> (index & 63)) & 1U;
    }

    inline void set(std::span<std::uint64_t> w, std::uint32_t index) noexcept {
      w[index >> 6] |= std::uint64_t{1} << (index & 63);
    }

    inline void reset(std::span<std::uint64_t> w, std::uint32_t index) noexcept {
      w[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
    }

    // Calls f(index) for every set position, ascending.
    template <typename F>
    void for_each_set(std::span<std::uint64_t const> w, F&& f) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::uint64_t b = w[j]; b != 0; b &= b - 1) {
          f(static_cast<std::uint32_t>((j << 6) + std::countr_zero(b)));
        }
      }
    }

    inline std::size_t count(std::span<std::uint64_t const> w) noexcept {
      std::size_t c = 0;
      for (auto x : w) {
        c += static_cast<std::size_t>(std::popcount(x));
      }
      return c;
    }

    // In place: w := { A u {i} : A in w } u w, for every coordinate i.
    inline void upclose(std::span<std::uint64_t> w, std::size_t n) noexcept {
      for (std::size_t i = 0; i < n && i < 6; ++i) {
        auto const s = std::size_t{1} << i;
        for (auto& x : w) {
          x |= (x & ~has_bit[i]) << s;
        }
      }
      for (std::size_t i = 6; i < n; ++i) {
        auto const stride = std::size_t{1} << (i - 6);
        for (std::size_t j = 0; j < w.size(); ++j) {
          if ((j & stride) == 0) {
            w[j | stride] |= w[j];
          }
        }
      }
      w.back() &= tail_mask(n);
    }

    // Members A such that A \ {i} is not a member for any i in A.
    inline Words minimal(std::span<std::uint64_t const> w, std::size_t n) {
      Words down(w.size(), 0);
      for (std::size_t i = 0; i < n && i < 6; ++i) {
        auto const s = std::size_t{1} << i;
        for (std::size_t j = 0; j < w.size(); ++j) {
          down[j] |= (w[j] & ~has_bit[i]) << s;
        }
      }
      for (std::size_t i = 6; i < n; ++i) {
        auto const stride = std::size_t{1} << (i - 6);
        for (std::size_t j = 0; j < w.size(); ++j) {
          if ((j & stride) == 0) {
            down[j | stride] |= w[j];
          }
        }
      }
      Words out(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) {
        out[j] = w[j] & ~down[j];
      }
      return out;
    }

  }  // namespace detail
}  // namespace ghyper

#endif  // GHYPER_BITS_HPP_
