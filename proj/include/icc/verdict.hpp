#pragma once

namespace icc {

enum class VerdictStatus { verified, falsified, unknown };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::verified: return "verified";
    case VerdictStatus::falsified: return "falsified";
    case VerdictStatus::unknown: return "unknown";
  }
  return "?";
}

}  // namespace icc
