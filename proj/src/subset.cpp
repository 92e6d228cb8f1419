#include "proxideal/subset.hpp"

#include <string>

namespace proxideal {

std::size_t Subset::check_universe(std::size_t universe) {
  if (universe > kMaxPoints) {
    throw Error(ErrorKind::SizeOverflow,
                "ground set of " + std::to_string(universe) + " points exceeds the limit of " +
                    std::to_string(kMaxPoints));
  }
  return universe;
}

Subset::Subset(std::size_t universe, std::initializer_list<Point> members) : Subset(universe) {
  for (Point p : members) insert(p);
}

Subset::Subset(std::size_t universe, std::vector<Point> const& members) : Subset(universe) {
  for (Point p : members) insert(p);
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.bits_ = low_mask(universe);
  return s;
}

Subset Subset::from_bits(std::size_t universe, std::uint64_t bits) {
  Subset s(universe);
  if ((bits & ~low_mask(universe)) != 0) {
    throw Error(ErrorKind::InvalidArgument, "subset mask has members outside the universe");
  }
  s.bits_ = bits;
  return s;
}

void Subset::insert(Point p) {
  if (p >= universe_) {
    throw Error(ErrorKind::InvalidArgument,
                "point " + std::to_string(p) + " outside a universe of " +
                    std::to_string(universe_),
                {p});
  }
  bits_ |= std::uint64_t{1} << p;
}

std::vector<Point> Subset::members() const {
  std::vector<Point> out;
  out.reserve(size());
  for (Point p : *this) out.push_back(p);
  return out;
}

void Subset::check_same(Subset const& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorKind::MismatchedSpace, "subsets of spaces with " + std::to_string(universe_) +
                                                " and " + std::to_string(other.universe_) +
                                                " points");
  }
}

Subset& Subset::operator|=(Subset const& other) {
  check_same(other);
  bits_ |= other.bits_;
  return *this;
}

Subset& Subset::operator&=(Subset const& other) {
  check_same(other);
  bits_ &= other.bits_;
  return *this;
}

Subset& Subset::operator-=(Subset const& other) {
  check_same(other);
  bits_ &= ~other.bits_;
  return *this;
}

}  // namespace proxideal
