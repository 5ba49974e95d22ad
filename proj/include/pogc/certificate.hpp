#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pogc/pog.hpp"

namespace pogc {

enum class CertTag {
  OddClosedWalkAux,
  OrientationConflict,
  BadTriple,
  Bridge,
  DirectedCut,
  DirectedCycle,
  NonAdjacentPair,
  NotChordal,
  NoCompletion,
};

enum class AuxMode { local_tournament, quasi_transitive };

// Payload by tag:
//   OddClosedWalkAux     walk = aux vertices (ordered pairs) of a closed walk
//                        of odd length; consecutive entries adjacent in G+.
//   OrientationConflict  walk = aux path of odd length whose two ends are
//                        arcs of P (or of its closure when location says so).
//   BadTriple            vertices = x,y,z.
//   Bridge               vertices = u,v.
//   DirectedCut          vertices = S.
//   DirectedCycle        vertices = cycle; location = "", "consentaneous
//                        closure", "cell", "out-neighbourhood of v",
//                        "in-neighbourhood of v".
//   NonAdjacentPair      vertices = u,v.
//   NotChordal           vertices = obstruction, location = hole|claw|net|tent.
//   NoCompletion         location names the exhausted search; walk may carry
//                        a 2-SAT implication cycle as literals (tail,head).
struct Certificate {
  CertTag tag = CertTag::NoCompletion;
  std::vector<Vertex> vertices;
  std::vector<Arc> walk;
  std::string location;
  AuxMode mode = AuxMode::local_tournament;
};

std::string_view tag_name(CertTag t);
std::optional<CertTag> tag_from_name(std::string_view s);

bool verify_certificate(const Pog& p, const Certificate& c);

// Value or refutation.
template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Certificate c) : v_(std::move(c)) {}

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }
  const T& value() const { return std::get<0>(v_); }
  T& value() { return std::get<0>(v_); }
  const Certificate& certificate() const { return std::get<1>(v_); }

 private:
  std::variant<T, Certificate> v_;
};

}  // namespace pogc
