#include "haefliger/diagram.hpp"

#include <string>

#include "haefliger/error.hpp"

namespace haefliger {

namespace {

std::string describe(LiftId id) {
  return "(" + std::to_string(id.crossing) + "," + std::to_string(id.level) + ")";
}

void check_lift(LiftId id, int m) {
  if (id.crossing < 1 || id.crossing > m) {
    throw Error(ErrorKind::IndexOutOfRange,
                "lift " + describe(id) + " references a crossing outside 1.." + std::to_string(m));
  }
  if (id.level != 0 && id.level != 1) {
    throw Error(ErrorKind::IndexOutOfRange, "lift " + describe(id) + " has a level other than 0 or 1");
  }
}

LiftId flip_if(LiftId id, const CrossingSet& s) {
  if (s.count(id.crossing)) id.level ^= 1;
  return id;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AsymmetricEntry: return "AsymmetricEntry";
    case ErrorKind::InvalidEntry: return "InvalidEntry";
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::NonGenericProjection: return "NonGenericProjection";
    case ErrorKind::CurvesIntersect: return "CurvesIntersect";
    case ErrorKind::BandObstructed: return "BandObstructed";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InconsistentEvent: return "InconsistentEvent";
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

LiftPair make_lift_pair(LiftId a, LiftId b) {
  return a < b ? LiftPair{a, b} : LiftPair{b, a};
}

int CrossingDiagram::lk(LiftId a, LiftId b) const {
  auto it = lk_.find(make_lift_pair(a, b));
  return it == lk_.end() ? 0 : it->second;
}

int CrossingDiagram::writhe(LiftId lift) const {
  auto it = writhe_.find(lift);
  return it == writhe_.end() ? 0 : it->second;
}

RawDiagram CrossingDiagram::to_raw() const {
  RawDiagram raw{k_, m_, {}, {}};
  for (const auto& [key, value] : lk_) raw.lk.push_back({key.first, key.second, value});
  for (const auto& [lift, value] : writhe_) raw.writhe.push_back({lift, value});
  return raw;
}

CrossingDiagram validate_diagram(const RawDiagram& raw) {
  if (raw.k < 1) throw Error(ErrorKind::InvalidEntry, "k must be a positive integer");
  if (raw.m < 0) throw Error(ErrorKind::InvalidEntry, "m must be non-negative");

  // Collect every stated value first so that conflicting restatements of one
  // unordered pair are caught even when one of them is zero.
  std::map<LiftPair, int> seen;
  for (const auto& e : raw.lk) {
    check_lift(e.a, raw.m);
    check_lift(e.b, raw.m);
    if (e.a == e.b) {
      throw Error(ErrorKind::InvalidEntry, "linking entry pairs lift " + describe(e.a) + " with itself");
    }
    auto key = make_lift_pair(e.a, e.b);
    auto [it, inserted] = seen.emplace(key, e.value);
    if (!inserted && it->second != e.value) {
      throw Error(ErrorKind::AsymmetricEntry, "conflicting linking values for pair " +
                                                  describe(key.first) + "-" + describe(key.second));
    }
  }
  std::map<LiftId, int> seen_writhe;
  for (const auto& w : raw.writhe) {
    check_lift(w.lift, raw.m);
    auto [it, inserted] = seen_writhe.emplace(w.lift, w.value);
    if (!inserted && it->second != w.value) {
      throw Error(ErrorKind::AsymmetricEntry, "conflicting writhe values for lift " + describe(w.lift));
    }
  }

  CrossingDiagram d;
  d.k_ = raw.k;
  d.m_ = raw.m;
  for (const auto& [key, value] : seen)
    if (value != 0) d.lk_.emplace(key, value);
  for (const auto& [lift, value] : seen_writhe)
    if (value != 0) d.writhe_.emplace(lift, value);
  return d;
}

void check_crossing_set(const CrossingDiagram& d, const CrossingSet& s) {
  for (int i : s) {
    if (i < 1 || i > d.m()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "crossing " + std::to_string(i) + " outside 1.." + std::to_string(d.m()));
    }
  }
}

CrossingDiagram crossing_change(const CrossingDiagram& d, const CrossingSet& s) {
  check_crossing_set(d, s);
  CrossingDiagram out;
  out.k_ = d.k_;
  out.m_ = d.m_;
  for (const auto& [key, value] : d.lk_) {
    out.lk_.emplace(make_lift_pair(flip_if(key.first, s), flip_if(key.second, s)), value);
  }
  for (const auto& [lift, value] : d.writhe_) out.writhe_.emplace(flip_if(lift, s), value);
  return out;
}

}  // namespace haefliger
