#include "sdual/knownz.hpp"

#include "sdual/errors.hpp"

namespace sdual {

namespace {

const char* kGL = "Gorodentsev-Leenson, MPI preprint 96-49 (Bott residue formula)";

std::vector<ZSeries> build_table() {
  std::vector<ZSeries> table;

  table.push_back(ZSeries{
      -1,
      "Z_-1",
      {},
      std::string("polynomial of degree <= 4 in q; coefficients not on record (") + kGL + ")"});

  table.push_back(ZSeries{
      0,
      "Z_0",
      {{0, Int(1), kGL}, {1, Int(1), kGL}},
      "rank-one series: Z_0 = 1 + q"});

  table.push_back(ZSeries{
      1,
      "Z_1",
      {{1, Int(1), kGL},
       {4, Int(13), kGL},
       {5, Int(729), kGL},
       {6, Int(85025), kGL},
       {7, Int(15650066), kGL}},
      "Z_1 = q + 13q^4 + 729q^5 + 85025q^6 + 15650066q^7 + ..."});

  return table;
}

}  // namespace

const std::vector<ZSeries>& known_z_table() {
  static const std::vector<ZSeries> table = build_table();
  return table;
}

const ZSeries& known_z_series(int index) {
  for (const ZSeries& s : known_z_table())
    if (s.index == index) return s;
  throw DomainError("known-z: no series with index " + std::to_string(index));
}

}  // namespace sdual
