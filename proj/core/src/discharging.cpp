#include "saturnum/discharging.hpp"

#include <algorithm>

namespace saturnum {

int ChargeLedger::black_count() const {
  return static_cast<int>(std::count(black.begin(), black.end(), 1));
}
int ChargeLedger::white_count() const {
  return static_cast<int>(black.size()) - black_count();
}

long long ChargeLedger::total() const {
  long long t = 0;
  for (long long c : vertex_charge) t += c;
  for (long long c : face_charge) t += c;
  return t;
}

long long ChargeLedger::expected_total() const {
  return 3ll * black_count() - 6ll * white_count() + 36;
}

void ChargeLedger::check_conservation() const {
  if (total() != expected_total())
    throw DischargingError(CertFailure::ConservationViolated,
                           "charge total " + std::to_string(total()) +
                               " != 3|B|-6|W|+36 = " +
                               std::to_string(expected_total()));
}

ChargeLedger init_charges(const FullereneGraph& g, const Matching& m) {
  if (!m.valid_on(g.as_graph()))
    throw DischargingError(CertFailure::NotMaximal, "matching is not valid on g");
  if (!is_maximal(g.as_graph(), m))
    throw DischargingError(CertFailure::NotMaximal, "matching is not maximal");

  ChargeLedger led;
  led.stage = Stage::INIT;
  led.black.assign(static_cast<std::size_t>(g.n()), 0);
  led.partner.assign(static_cast<std::size_t>(g.n()), -1);
  for (const auto& [u, v] : m.edges) {
    led.black[static_cast<std::size_t>(u)] = 1;
    led.black[static_cast<std::size_t>(v)] = 1;
    led.partner[static_cast<std::size_t>(u)] = v;
    led.partner[static_cast<std::size_t>(v)] = u;
  }
  led.vertex_charge.assign(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v)
    led.vertex_charge[static_cast<std::size_t>(v)] = led.black[static_cast<std::size_t>(v)] ? 3 : -6;
  led.face_charge.assign(static_cast<std::size_t>(g.face_count()), 0);
  for (const auto& f : g.faces())
    led.face_charge[static_cast<std::size_t>(f.id)] = f.size() == 5 ? 3 : 0;
  led.face_class.assign(static_cast<std::size_t>(g.face_count()), FaceClass::UNCLASSIFIED);
  led.roles.assign(static_cast<std::size_t>(g.face_count()), {});
  led.check_conservation();
  return led;
}

void apply_R1(const FullereneGraph& g, ChargeLedger& led) {
  if (led.stage != Stage::INIT) throw std::logic_error("R1 expects INIT stage");
  for (int w = 0; w < g.n(); ++w) {
    if (led.black[static_cast<std::size_t>(w)]) continue;
    for (int b : g.rotation(w)) {
      if (!led.black[static_cast<std::size_t>(b)])
        throw DischargingError(CertFailure::WhiteAdjacency,
                               "white vertices " + std::to_string(w) + "," +
                                   std::to_string(b) + " are adjacent");
      // sending -2 of charge raises the sender by 2
      led.vertex_charge[static_cast<std::size_t>(w)] += 2;
      led.vertex_charge[static_cast<std::size_t>(b)] -= 2;
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    long long c = led.vertex_charge[static_cast<std::size_t>(v)];
    if (!led.black[static_cast<std::size_t>(v)] && c != 0)
      throw DischargingError(CertFailure::ConservationViolated,
                             "white vertex with nonzero charge after R1");
    if (led.black[static_cast<std::size_t>(v)] && c != 3 && c != 1 && c != -1)
      throw DischargingError(CertFailure::ConservationViolated,
                             "black vertex charge outside {3,1,-1} after R1");
  }
  led.stage = Stage::R1;
  led.check_conservation();
}

namespace {

// The face incident with v but not with its matching edge: v's three faces
// are spanned by consecutive rotation pairs; exactly one avoids the partner.
int off_edge_face(const FullereneGraph& g, int v, int partner) {
  int fa = g.face_left_of(v, partner);
  int fb = g.face_left_of(partner, v);
  for (int x : g.rotation(v)) {
    int f1 = g.face_left_of(v, x);
    if (f1 != fa && f1 != fb) return f1;
    int f2 = g.face_left_of(x, v);
    if (f2 != fa && f2 != fb) return f2;
  }
  throw std::logic_error("no face avoiding the matching edge at vertex " +
                         std::to_string(v));
}

}  // namespace

void apply_R2(const FullereneGraph& g, ChargeLedger& led) {
  if (led.stage != Stage::R1) throw std::logic_error("R2 expects R1 stage");
  for (int v = 0; v < g.n(); ++v) {
    if (!led.black[static_cast<std::size_t>(v)]) continue;
    int fv = off_edge_face(g, v, led.partner[static_cast<std::size_t>(v)]);
    led.face_charge[static_cast<std::size_t>(fv)] += led.vertex_charge[static_cast<std::size_t>(v)];
    led.vertex_charge[static_cast<std::size_t>(v)] = 0;
  }
  led.stage = Stage::R2;
  led.check_conservation();
}

void classify_faces(const FullereneGraph& g, ChargeLedger& led) {
  if (led.stage != Stage::R2) throw std::logic_error("classification expects R2 stage");
  for (const auto& f : g.faces()) {
    const auto& b = f.boundary;
    const int sz = f.size();
    std::vector<int> whites;
    int black_edges = 0;
    for (int i = 0; i < sz; ++i) {
      int u = b[static_cast<std::size_t>(i)];
      int v = b[static_cast<std::size_t>((i + 1) % sz)];
      if (!led.black[static_cast<std::size_t>(u)]) whites.push_back(u);
      if (led.partner[static_cast<std::size_t>(u)] == v) ++black_edges;
    }
    long long ch = led.face_charge[static_cast<std::size_t>(f.id)];
    FaceClass cls;
    if (ch > 0) {
      cls = FaceClass::GOOD;
    } else if (ch == 0 && whites.empty()) {
      cls = FaceClass::UNCLASSIFIED;  // inert: no charge, no white vertex
    } else if (ch == 0 && whites.size() == 2 && sz == 6) {
      if (black_edges == 1) {
        cls = FaceClass::TRANSITION;
        // incoming: both face-neighbors black and unmatched to each other;
        // outgoing: adjacent to an endpoint of the face's black edge
        TransitionRoles roles;
        for (int w : whites) {
          int pos = -1;
          for (int i = 0; i < sz; ++i)
            if (b[static_cast<std::size_t>(i)] == w) pos = i;
          int left = b[static_cast<std::size_t>((pos + sz - 1) % sz)];
          int right = b[static_cast<std::size_t>((pos + 1) % sz)];
          auto on_black_face_edge = [&](int u) {
            int p = led.partner[static_cast<std::size_t>(u)];
            if (p < 0) return false;
            // matched along this face?
            for (int i = 0; i < sz; ++i) {
              int a = b[static_cast<std::size_t>(i)];
              int c = b[static_cast<std::size_t>((i + 1) % sz)];
              if ((a == u && c == p) || (a == p && c == u)) return true;
            }
            return false;
          };
          bool l = on_black_face_edge(left), r = on_black_face_edge(right);
          if (!l && !r)
            roles.incoming = w;
          else if (l != r)
            roles.outgoing = w;
        }
        if (roles.incoming < 0 || roles.outgoing < 0 ||
            roles.incoming == roles.outgoing)
          throw DischargingError(CertFailure::ClassificationMismatch,
                                 "transition face " + std::to_string(f.id) +
                                     " has unresolvable white roles");
        led.roles[static_cast<std::size_t>(f.id)] = roles;
      } else if (black_edges == 2) {
        cls = FaceClass::NEUTRAL;
      } else {
        throw DischargingError(CertFailure::ClassificationMismatch,
                               "charge-0 two-white hexagon " + std::to_string(f.id) +
                                   " has " + std::to_string(black_edges) +
                                   " black edges");
      }
    } else if (ch == -3 && whites.size() == 3 && sz == 6) {
      cls = FaceClass::BAD;
    } else {
      throw DischargingError(
          CertFailure::ClassificationMismatch,
          "face " + std::to_string(f.id) + " (size " + std::to_string(sz) +
              ") has charge " + std::to_string(ch) + " with " +
              std::to_string(whites.size()) + " white vertices");
    }
    if (sz == 5 && cls == FaceClass::BAD)
      throw DischargingError(CertFailure::ClassificationMismatch,
                             "pentagon classified bad");
    led.face_class[static_cast<std::size_t>(f.id)] = cls;
  }
}

void apply_R3R4R5(const FullereneGraph& g, ChargeLedger& led) {
  if (led.stage != Stage::R2) throw std::logic_error("R3-R5 expect classified R2 stage");
  for (const auto& f : g.faces()) {
    auto send = [&](int w, long long amount) {
      led.face_charge[static_cast<std::size_t>(f.id)] -= amount;
      led.vertex_charge[static_cast<std::size_t>(w)] += amount;
    };
    switch (led.face_class[static_cast<std::size_t>(f.id)]) {
      case FaceClass::GOOD:
        for (int u : f.boundary)
          if (!led.black[static_cast<std::size_t>(u)]) send(u, 1);
        break;
      case FaceClass::BAD:
        for (int u : f.boundary)
          if (!led.black[static_cast<std::size_t>(u)]) send(u, -1);
        break;
      case FaceClass::TRANSITION: {
        const auto& roles = led.roles[static_cast<std::size_t>(f.id)];
        send(roles.incoming, -1);
        send(roles.outgoing, 1);
        break;
      }
      case FaceClass::NEUTRAL:
      case FaceClass::UNCLASSIFIED:
        break;
    }
  }
  led.stage = Stage::R3R4R5;
  led.check_conservation();
  for (int v = 0; v < g.n(); ++v)
    if (led.vertex_charge[static_cast<std::size_t>(v)] < 0)
      throw DischargingError(CertFailure::NegativeResidual,
                             "vertex " + std::to_string(v) +
                                 " ends with negative charge");
  for (const auto& f : g.faces())
    if (led.face_charge[static_cast<std::size_t>(f.id)] < 0)
      throw DischargingError(CertFailure::NegativeResidual,
                             "face " + std::to_string(f.id) +
                                 " ends with negative charge");
}

CertificateReport verify_certificate(const FullereneGraph& g, const Matching& m) {
  CertificateReport rep;
  rep.implied_bound = (g.n() - 6 + 2) / 3;
  try {
    rep.ledger = init_charges(g, m);
    rep.stage_totals[0] = rep.ledger.total();
    apply_R1(g, rep.ledger);
    rep.stage_totals[1] = rep.ledger.total();
    apply_R2(g, rep.ledger);
    rep.stage_totals[2] = rep.ledger.total();
    classify_faces(g, rep.ledger);
    apply_R3R4R5(g, rep.ledger);
    rep.stage_totals[3] = rep.ledger.total();
  } catch (const DischargingError& e) {
    rep.valid = false;
    rep.failure = e.what();
    return rep;
  }
  for (const auto& f : g.faces())
    ++rep.class_histogram[static_cast<std::size_t>(
        rep.ledger.face_class[static_cast<std::size_t>(f.id)])];

  // Re-derive the counting bound from the ledger, not from the statement:
  // total >= 0 and conservation give 3|B| >= 2|B| + 2|W| - 12, and with
  // |M| = |B|/2 that is 6|M| >= 2n - 12.
  long long total = rep.ledger.total();
  long long B = rep.ledger.black_count(), W = rep.ledger.white_count();
  bool chain = total >= 0 && total == 3 * B - 6 * W + 36 &&
               3 * B >= 2 * B + 2 * W - 12 &&
               6ll * static_cast<long long>(m.size()) >= 2ll * g.n() - 12 &&
               static_cast<long long>(m.size()) >= rep.implied_bound;
  rep.valid = chain;
  if (!chain) rep.failure = "derived inequality chain failed";
  return rep;
}

}  // namespace saturnum
