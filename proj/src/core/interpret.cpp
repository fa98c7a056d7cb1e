#include "core/interpret.h"

namespace tonesearch {

InterpretationScheme InterpretationScheme::hyman() {
  return {Rational(1), Rational(3), Rational(0), Rational(1), Rational(1)};
}

InterpretationScheme InterpretationScheme::stewart() {
  return {Rational(1), Rational(2), Rational(0), Rational(1), Rational(1)};
}

InterpretationScheme InterpretationScheme::novel() {
  return {Rational(1), Rational(5, 2), Rational(0), Rational(1, 2), Rational(1, 2)};
}

std::vector<Rational> interpret(std::span<const Tone> tones, const InterpretationScheme& s) {
  std::vector<Rational> out;
  out.reserve(tones.size());
  Rational reg = s.initial_register;
  for (const Tone& t : tones) {
    if (t.step == Step::Down) reg = reg + s.down_increment;
    if (t.step == Step::Up) reg = reg - s.up_decrement;
    const Rational level = (t.base == ToneBase::High) ? s.level_h : s.level_l;
    out.push_back(level + reg);
  }
  return out;
}

}  // namespace tonesearch
