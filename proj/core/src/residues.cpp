#include "tdcalc/residues.hpp"

#include <cstddef>

namespace tdcalc {

FnElem restrict_to_stratum(const FnElem& f, const Chart& chart, int i,
                           bool keep_angle) {
  if (i < 0 || i >= chart.num_r) throw std::out_of_range("radius index");
  FnElem out;
  for (const auto& [k, v] : f.terms()) {
    if (k.r.at(i) < 0)
      throw SingularRestrictionError("singular along the stratum: negative " +
                                     chart.r_names[i] + " exponent");
    if (k.r[i] > 0) continue;
    ExpKey nk;
    nk.r = k.r;
    nk.r.erase(nk.r.begin() + i);
    nk.x = k.x;
    nk.param = k.param;
    for (int j = 0; j < chart.num_angles(); ++j) {
      if (!keep_angle && chart.angle_anchor[j] == i) {
        if (k.fourier[j] != 0)
          throw NotBasicError("not basic along D: mode in " +
                              chart.angle_names[j] + " survives restriction");
        continue;
      }
      nk.fourier.push_back(k.fourier[j]);
    }
    out += FnElem::monomial(v, nk);
  }
  return out;
}

namespace {

int slot_pos(const Chart& chart, const FrameSlot& slot) {
  auto fr = frame(chart);
  for (std::size_t p = 0; p < fr.size(); ++p)
    if (fr[p] == slot) return static_cast<int>(p);
  throw std::logic_error("frame slot not present");
}

void require_kind(const Chart& chart, FrameKind kind, const char* what) {
  if (chart.kind != kind)
    throw std::invalid_argument(std::string(what) +
                                " requires the matching real frame");
}

// Restriction to {r_i = 0} of a whole form; every term must already be free
// of the frame legs the surgery removes (the residue maps contract them away
// first). Tracks the sign of reordering surviving legs into the new frame.
Form restrict_form(const Form& w, int i, bool keep_angle) {
  const Chart& src = *w.chart();
  ChartPtr dst = keep_angle ? demote_r(src, i) : remove_pair(src, i);
  auto sf = frame(src);
  auto df = frame(*dst);
  std::vector<int> pos(sf.size(), -1);
  for (std::size_t p = 0; p < sf.size(); ++p) {
    FrameSlot t = sf[p];
    bool removed = false;
    switch (t.kind) {
      case FrameSlot::Kind::DLogR:
        if (t.index == i)
          removed = true;
        else if (t.index > i)
          --t.index;
        break;
      case FrameSlot::Kind::DAngle:
        if (!keep_angle) {
          if (src.angle_anchor[t.index] == i) {
            removed = true;
          } else {
            int shift = 0;
            for (int j = 0; j < t.index; ++j)
              if (src.angle_anchor[j] == i) ++shift;
            t.index -= shift;
          }
        }
        break;
      default:
        break;
    }
    if (removed) continue;
    for (std::size_t q = 0; q < df.size(); ++q)
      if (df[q] == t) {
        pos[p] = static_cast<int>(q);
        break;
      }
  }
  Form out(dst);
  for (const auto& [mask, coeff] : w.terms()) {
    std::vector<int> dst_pos;
    for (std::size_t b = 0; b < sf.size(); ++b)
      if (mask >> b & 1) {
        if (pos[b] < 0)
          throw std::logic_error("restriction of a removed frame leg");
        dst_pos.push_back(pos[b]);
      }
    FrameMask nm = 0;
    int inv = 0;
    for (std::size_t a = 0; a < dst_pos.size(); ++a) {
      nm |= FrameMask(1) << dst_pos[a];
      for (std::size_t b = a + 1; b < dst_pos.size(); ++b)
        if (dst_pos[a] > dst_pos[b]) ++inv;
    }
    FnElem rc = restrict_to_stratum(coeff, src, i, keep_angle);
    if (rc.is_zero()) continue;
    if (inv % 2) rc = -rc;
    out.add_term(nm, rc);
  }
  return out;
}

}  // namespace

Form res_q(const Form& w, int i) {
  const Chart& c = *w.chart();
  require_kind(c, FrameKind::Elliptic, "res_q");
  int j = c.anchored_angle(i);
  if (j < 0) throw std::invalid_argument("radius has no anchored angle");
  auto X = Multivector::vector(w.chart(),
                               slot_pos(c, {FrameSlot::Kind::DLogR, i}));
  auto Y = Multivector::vector(w.chart(),
                               slot_pos(c, {FrameSlot::Kind::DAngle, j}));
  return restrict_form(contract(wedge(X, Y), w), i, false);
}

Form res_r(const Form& w, int i) {
  const Chart& c = *w.chart();
  require_kind(c, FrameKind::Elliptic, "res_r");
  auto X = Multivector::vector(w.chart(),
                               slot_pos(c, {FrameSlot::Kind::DLogR, i}));
  return restrict_form(contract(X, w), i, true);
}

FnElem res_point(const Form& w, PointResidueKind kind, int i, int j) {
  const Chart& c = *w.chart();
  require_kind(c, FrameKind::Elliptic, "res_point");
  if (i == j) throw std::invalid_argument("point residue needs i != j");
  FrameSlot sx{FrameSlot::Kind::DLogR, i}, sy{FrameSlot::Kind::DLogR, j};
  if (kind != PointResidueKind::RR) {
    int aj = c.anchored_angle(j);
    if (aj < 0) throw std::invalid_argument("radius has no anchored angle");
    sy = {FrameSlot::Kind::DAngle, aj};
  }
  if (kind == PointResidueKind::ThetaTheta) {
    int ai = c.anchored_angle(i);
    if (ai < 0) throw std::invalid_argument("radius has no anchored angle");
    sx = {FrameSlot::Kind::DAngle, ai};
  }
  // w(X, Y) = i_Y i_X w, so contract with X first.
  Form v = contract(Multivector::vector(w.chart(), slot_pos(c, sy)),
                    contract(Multivector::vector(w.chart(), slot_pos(c, sx)), w));
  FnElem s = restrict_to_stratum(v.coefficient(0), c, i, false);
  ChartPtr c1 = remove_pair(c, i);
  return restrict_to_stratum(s, *c1, j > i ? j - 1 : j, false);
}

Form res_log(const Form& w, int i) {
  const Chart& c = *w.chart();
  require_kind(c, FrameKind::RealLog, "res_log");
  auto X = Multivector::vector(w.chart(),
                               slot_pos(c, {FrameSlot::Kind::DLogR, i}));
  return restrict_form(contract(X, w), i, true);
}

FnElem res_log2(const Form& w, int i, int j) {
  const Chart& c = *w.chart();
  require_kind(c, FrameKind::RealLog, "res_log2");
  if (i == j) throw std::invalid_argument("point residue needs i != j");
  Form v = contract(
      Multivector::vector(w.chart(), slot_pos(c, {FrameSlot::Kind::DLogR, j})),
      contract(Multivector::vector(w.chart(), slot_pos(c, {FrameSlot::Kind::DLogR, i})),
               w));
  FnElem s = restrict_to_stratum(v.coefficient(0), c, i, false);
  ChartPtr c1 = remove_pair(c, i);
  return restrict_to_stratum(s, *c1, j > i ? j - 1 : j, false);
}

}  // namespace tdcalc
