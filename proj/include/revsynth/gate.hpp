#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "revsynth/bit_string.hpp"
#include "revsynth/errors.hpp"

namespace revsynth
{

/*! \brief Mixed-polarity multiple-control Toffoli gate.
 *
 * The gate toggles its target line exactly when every positive control
 * reads 1 and every negative control reads 0.  Control sets are stored as
 * line masks.  A gate never controls its own target, and every gate is its
 * own inverse.
 */
class toffoli_gate
{
public:
  toffoli_gate( unsigned width, unsigned target, uint32_t positive_controls, uint32_t negative_controls )
      : width_( width ), target_( target ), pos_( positive_controls ), neg_( negative_controls )
  {
    if ( width_ < 1u || width_ > max_width )
    {
      throw width_error( "gate width " + std::to_string( width_ ) + " outside 1.." + std::to_string( max_width ) );
    }
    if ( target_ >= width_ )
    {
      throw error( "gate target " + std::to_string( target_ ) + " outside width " + std::to_string( width_ ) );
    }
    uint32_t const line_mask = ( width_ == 32u ) ? ~uint32_t{ 0 } : ( ( uint32_t{ 1 } << width_ ) - 1u );
    if ( ( pos_ & ~line_mask ) != 0u || ( neg_ & ~line_mask ) != 0u )
    {
      throw error( "gate control mask names a line outside width " + std::to_string( width_ ) );
    }
    if ( ( pos_ & neg_ ) != 0u )
    {
      throw error( "gate control sets overlap" );
    }
    if ( ( ( pos_ | neg_ ) >> target_ ) & 1u )
    {
      throw error( std::string( "gate controls its own target line " ) + line_name( target_ ) );
    }
  }

  /*! \brief Convenience constructor from explicit line lists. */
  static toffoli_gate from_lines( unsigned width, unsigned target,
                                  std::initializer_list<unsigned> positive,
                                  std::initializer_list<unsigned> negative )
  {
    uint32_t pos = 0u, neg = 0u;
    for ( auto l : positive )
    {
      pos |= uint32_t{ 1 } << l;
    }
    for ( auto l : negative )
    {
      neg |= uint32_t{ 1 } << l;
    }
    return toffoli_gate( width, target, pos, neg );
  }

  unsigned width() const { return width_; }
  unsigned target() const { return target_; }
  uint32_t positive_controls() const { return pos_; }
  uint32_t negative_controls() const { return neg_; }
  uint32_t control_lines() const { return pos_ | neg_; }

  unsigned control_count() const
  {
    return static_cast<unsigned>( std::popcount( pos_ | neg_ ) );
  }

  /*! \brief Apply the gate to a raw value (no width check; hot path). */
  uint32_t apply( uint32_t x ) const
  {
    bool const fire = ( ( x & pos_ ) == pos_ ) && ( ( x & neg_ ) == 0u );
    return fire ? ( x ^ ( uint32_t{ 1 } << target_ ) ) : x;
  }

  /*! \brief Copy of the gate with one control line removed. */
  toffoli_gate without_control( unsigned line ) const
  {
    uint32_t const m = ~( uint32_t{ 1 } << line );
    return toffoli_gate( width_, target_, pos_ & m, neg_ & m );
  }

  bool operator==( toffoli_gate const& other ) const
  {
    return width_ == other.width_ && target_ == other.target_ && pos_ == other.pos_ && neg_ == other.neg_;
  }

  bool operator!=( toffoli_gate const& other ) const { return !( *this == other ); }

private:
  unsigned width_;
  unsigned target_;
  uint32_t pos_;
  uint32_t neg_;
};

} // namespace revsynth
