#pragma once
// Per-instance discharging certificate for the fullerene lower bound
// s(F) >= n/3 - 2. Charges start at +3 per covered (black) vertex, -6 per
// uncovered (white) vertex and +3 per pentagon; rules R1..R5 move them
// around locally. Conservation and final nonnegativity are checked exactly
// (all transfers are integral), and a failure is reported, never patched.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "saturnum/fullerene.hpp"

namespace saturnum {

enum class Stage { INIT, R1, R2, R3R4R5 };

enum class FaceClass { GOOD, NEUTRAL, TRANSITION, BAD, UNCLASSIFIED };

enum class CertFailure {
  NotMaximal,
  WhiteAdjacency,
  ClassificationMismatch,
  NegativeResidual,
  ConservationViolated,
};

struct DischargingError : std::runtime_error {
  CertFailure kind;
  DischargingError(CertFailure k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

struct TransitionRoles {
  int incoming = -1;
  int outgoing = -1;
};

struct ChargeLedger {
  Stage stage = Stage::INIT;
  std::vector<long long> vertex_charge;
  std::vector<long long> face_charge;
  std::vector<char> black;    // covered by the matching
  std::vector<int> partner;   // matched partner, -1 for white vertices
  std::vector<FaceClass> face_class;
  std::vector<TransitionRoles> roles;  // valid where face_class == TRANSITION

  int black_count() const;
  int white_count() const;
  long long total() const;
  long long expected_total() const;  // 3|B| - 6|W| + 36
  void check_conservation() const;
};

ChargeLedger init_charges(const FullereneGraph& g, const Matching& m);
void apply_R1(const FullereneGraph& g, ChargeLedger& led);
void apply_R2(const FullereneGraph& g, ChargeLedger& led);
void classify_faces(const FullereneGraph& g, ChargeLedger& led);
void apply_R3R4R5(const FullereneGraph& g, ChargeLedger& led);

struct CertificateReport {
  bool valid = false;
  int implied_bound = 0;
  std::string failure;  // empty when valid
  std::array<long long, 4> stage_totals{};
  std::array<int, 5> class_histogram{};  // indexed by FaceClass
  ChargeLedger ledger;                   // final state (or state at failure)
};

CertificateReport verify_certificate(const FullereneGraph& g, const Matching& m);

}  // namespace saturnum
