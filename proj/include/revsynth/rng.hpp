#pragma once

#include <cstdint>
#include <vector>

namespace revsynth
{

/*! \brief Deterministic 64-bit generator (splitmix64).
 *
 * Chosen for portability: the sequence depends only on the seed, never on
 * platform or standard-library internals, so seeded runs are reproducible
 * byte for byte everywhere.
 */
class splitmix64
{
public:
  explicit splitmix64( uint64_t seed ) : state_( seed ) {}

  uint64_t next()
  {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = ( z ^ ( z >> 30 ) ) * 0xBF58476D1CE4E5B9ULL;
    z = ( z ^ ( z >> 27 ) ) * 0x94D049BB133111EBULL;
    return z ^ ( z >> 31 );
  }

  /*! \brief Uniform value in [0, bound). \p bound must be nonzero. */
  uint64_t next_below( uint64_t bound )
  {
    return next() % bound;
  }

private:
  uint64_t state_;
};

/*! \brief Fisher-Yates shuffle of 0..2^width-1 driven by splitmix64. */
inline std::vector<uint32_t> random_permutation( unsigned width, uint64_t seed )
{
  std::vector<uint32_t> perm( std::size_t{ 1 } << width );
  for ( uint32_t i = 0; i < perm.size(); ++i )
  {
    perm[i] = i;
  }
  splitmix64 rng( seed );
  for ( std::size_t i = perm.size(); i > 1; --i )
  {
    std::size_t const j = static_cast<std::size_t>( rng.next_below( i ) );
    std::swap( perm[i - 1], perm[j] );
  }
  return perm;
}

} // namespace revsynth
