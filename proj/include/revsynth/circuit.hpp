#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsynth/errors.hpp"
#include "revsynth/gate.hpp"

namespace revsynth
{

/*! \brief An ordered cascade of Toffoli gates over a fixed set of lines.
 *
 * Gates are stored in application order: the gate at index 0 acts on the
 * circuit inputs first.
 */
class circuit
{
public:
  explicit circuit( unsigned width )
      : width_( width )
  {
    if ( width_ < 1u || width_ > max_width )
    {
      throw width_error( "circuit width " + std::to_string( width_ ) + " outside 1.." + std::to_string( max_width ) );
    }
  }

  circuit( unsigned width, std::vector<toffoli_gate> gates )
      : circuit( width )
  {
    for ( auto const& g : gates )
    {
      add( g );
    }
  }

  unsigned width() const { return width_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void add( toffoli_gate const& g )
  {
    if ( g.width() != width_ )
    {
      throw width_mismatch( "gate width " + std::to_string( g.width() ) + " does not match circuit width " + std::to_string( width_ ) );
    }
    gates_.push_back( g );
  }

  toffoli_gate const& operator[]( std::size_t i ) const { return gates_[i]; }
  std::vector<toffoli_gate> const& gates() const { return gates_; }

  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  /*! \brief Copy with the gate order reversed (the inverse cascade, since
   * every gate is self-inverse). */
  circuit reversed() const
  {
    circuit out( width_ );
    for ( auto it = gates_.rbegin(); it != gates_.rend(); ++it )
    {
      out.add( *it );
    }
    return out;
  }

  bool operator==( circuit const& other ) const
  {
    return width_ == other.width_ && gates_ == other.gates_;
  }

  bool operator!=( circuit const& other ) const { return !( *this == other ); }

private:
  unsigned width_;
  std::vector<toffoli_gate> gates_;
};

} // namespace revsynth
