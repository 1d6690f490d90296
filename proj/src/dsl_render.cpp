#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "rotor/dsl.hpp"

namespace rotor::dsl {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kJsonSchema = 1;

// Folds -0.0 into 0.0 so equal traces print identically.
double clean(double v) { return v + 0.0; }

Json complex_json(Complex c) { return Json::array({clean(c.real()), clean(c.imag())}); }

Json spinor_json(const Spinor& s) { return Json::array({complex_json(s.up), complex_json(s.down)}); }

Json vec_json(const Vec3& v) { return Json::array({clean(v.x), clean(v.y), clean(v.z)}); }

Json matrix_json(const Matrix2& m) {
  return Json::array({Json::array({complex_json(m.a11), complex_json(m.a12)}),
                      Json::array({complex_json(m.a21), complex_json(m.a22)})});
}

Json measurement_json(const Axis& device, const MeasurementResult& r) {
  Json j;
  j["axis"] = vec_json(device.vec());
  j["amp_plus"] = complex_json(r.amp_plus);
  j["amp_minus"] = complex_json(r.amp_minus);
  j["p_plus"] = clean(r.p_plus);
  j["p_minus"] = clean(r.p_minus);
  return j;
}

Json audit_json(const AuditReport& a) {
  Json j;
  j["handedness"] = std::string(to_string(a.handedness));
  j["axis"] = vec_json(a.axis.vec());
  j["angle"] = clean(a.angle);
  j["angle_deg"] = clean(a.angle * 180.0 / std::numbers::pi);
  j["ambiguous_axis"] = a.ambiguous_axis;
  j["half_turn_tie"] = a.half_turn_tie;
  return j;
}

const char* emit_name(EmitWhat w) {
  switch (w) {
    case EmitWhat::State: return "state";
    case EmitWhat::Bloch: return "bloch";
    case EmitWhat::Operator: return "operator";
    case EmitWhat::All: return "all";
  }
  return "?";
}

void add_selected(Json& j, const Snapshot& s, EmitWhat w) {
  if (w == EmitWhat::State || w == EmitWhat::All) j["state"] = spinor_json(s.state);
  if (w == EmitWhat::Bloch || w == EmitWhat::All) j["bloch"] = vec_json(s.bloch);
  if (w == EmitWhat::Operator || w == EmitWhat::All) j["operator"] = matrix_json(s.op);
}

std::string render_json(const EvalTrace& trace) {
  Json root;
  root["schema"] = kJsonSchema;
  root["convention"] = std::string(to_string(trace.initial_convention));

  Json steps = Json::array();
  Json emits = Json::array();
  for (const StepRecord& r : trace.steps) {
    Json step;
    step["index"] = r.index;
    step["line"] = r.pos.line;
    step["statement"] = r.source;
    step["convention"] = std::string(to_string(r.snapshot.convention));
    add_selected(step, r.snapshot, EmitWhat::All);
    if (r.measurement) step["measurement"] = measurement_json(*r.device, *r.measurement);
    if (r.audit) step["audit"] = audit_json(*r.audit);
    steps.push_back(std::move(step));

    if (r.emit) {
      Json e;
      e["index"] = r.index;
      e["line"] = r.pos.line;
      e["what"] = emit_name(*r.emit);
      add_selected(e, r.snapshot, *r.emit);
      emits.push_back(std::move(e));
    }
  }
  root["emits"] = std::move(emits);
  root["steps"] = std::move(steps);

  Json fin;
  const Snapshot& s = trace.final_snapshot();
  fin["convention"] = std::string(to_string(s.convention));
  add_selected(fin, s, EmitWhat::All);
  root["final"] = std::move(fin);
  return root.dump(2) + "\n";
}

std::string g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", clean(v));
  return buf;
}

std::string complex_text(Complex c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", clean(c.real()), clean(c.imag()));
  return buf;
}

std::string vec_text(const Vec3& v) {
  return "(" + g12(v.x) + ", " + g12(v.y) + ", " + g12(v.z) + ")";
}

const char* convention_label(Convention c) {
  return c == Convention::PaperRight ? "right (U+ = exp(+i phi/2 sigma.n))"
                                     : "left (U = exp(-i phi/2 sigma.n))";
}

void text_selected(std::ostream& os, const Snapshot& s, EmitWhat w) {
  if (w == EmitWhat::State || w == EmitWhat::All) {
    os << "    state     up = " << complex_text(s.state.up) << "   down = " << complex_text(s.state.down)
       << "\n";
  }
  if (w == EmitWhat::Bloch || w == EmitWhat::All) os << "    bloch     " << vec_text(s.bloch) << "\n";
  if (w == EmitWhat::Operator || w == EmitWhat::All) {
    os << "    operator  [" << complex_text(s.op.a11) << ", " << complex_text(s.op.a12) << "]\n"
       << "              [" << complex_text(s.op.a21) << ", " << complex_text(s.op.a22) << "]\n";
  }
}

std::string render_text(const EvalTrace& trace) {
  std::ostringstream os;
  os << "convention: " << convention_label(trace.initial_convention) << "\n";
  for (const StepRecord& r : trace.steps) {
    if (!r.measurement && !r.audit && !r.emit && !r.convention_set) continue;
    os << "[" << r.index << "] line " << r.pos.line << ": " << r.source << "\n";
    if (r.convention_set) os << "    convention " << convention_label(*r.convention_set) << "\n";
    if (r.measurement) {
      const MeasurementResult& m = *r.measurement;
      os << "    device    " << vec_text(r.device->vec()) << "\n"
         << "    amp+ = " << complex_text(m.amp_plus) << "   p+ = " << g12(m.p_plus) << "\n"
         << "    amp- = " << complex_text(m.amp_minus) << "   p- = " << g12(m.p_minus) << "\n";
    }
    if (r.audit) {
      const AuditReport& a = *r.audit;
      os << "    audit     " << to_string(a.handedness) << " about " << vec_text(a.axis.vec())
         << " by " << g12(a.angle) << " rad (" << g12(a.angle * 180.0 / std::numbers::pi)
         << " deg)";
      if (a.ambiguous_axis) os << " [axis undefined]";
      if (a.half_turn_tie) os << " [half turn: both senses agree, reported RightScrew]";
      os << "\n";
    }
    if (r.emit) text_selected(os, r.snapshot, *r.emit);
  }
  os << "final:\n";
  text_selected(os, trace.final_snapshot(), EmitWhat::All);
  return os.str();
}

}  // namespace

std::string render(const EvalTrace& trace, Format format) {
  return format == Format::Json ? render_json(trace) : render_text(trace);
}

}  // namespace rotor::dsl
