#include "digicover/verdict.hpp"

namespace digicover {

const char* to_string(Leg leg) {
  switch (leg) {
    case Leg::Continuity:
      return "continuity";
    case Leg::Injectivity:
      return "injectivity";
    case Leg::Surjectivity:
      return "surjectivity";
    case Leg::InverseContinuity:
      return "inverse_continuity";
  }
  return "unknown";
}

}  // namespace digicover
