#pragma once

#include <cstdint>
#include <vector>

#include "revsynth/bit_string.hpp"
#include "revsynth/errors.hpp"

namespace revsynth
{

/*! \brief A reversible function of n lines, given as a permutation of 0..2^n-1.
 *
 * Entry i is the output row for input row i.  Construction validates that
 * the sequence is a permutation.
 */
class reversible_spec
{
public:
  reversible_spec( unsigned width, std::vector<uint32_t> permutation );

  unsigned width() const { return width_; }
  uint32_t size() const { return static_cast<uint32_t>( perm_.size() ); }

  uint32_t operator[]( uint32_t row ) const { return perm_[row]; }
  std::vector<uint32_t> const& permutation() const { return perm_; }

  bool operator==( reversible_spec const& other ) const
  {
    return width_ == other.width_ && perm_ == other.perm_;
  }

  bool operator!=( reversible_spec const& other ) const { return !( *this == other ); }

private:
  unsigned width_;
  std::vector<uint32_t> perm_;
};

/*! \brief The identity function on the given number of lines. */
reversible_spec identity_spec( unsigned width );

/*! \brief The inverse permutation (swaps the roles of input and output). */
reversible_spec inverse( reversible_spec const& spec );

/*! \brief Sum over all rows of the Hamming distance between input and output.
 *
 * A coarse difficulty measure: it is 0 exactly for the identity, and it is
 * invariant under taking the inverse.
 */
uint64_t complexity( reversible_spec const& spec );

} // namespace revsynth
