#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

enum class Errc {
  inadmissible_rank,
  index_out_of_range,
  bad_vector,
  cap_exceeded,
  not_dominant,
  bad_coroot_pairing,
  y_outside_hull,
  chain_step_missing,     // non-dominant z with no eligible next index: kernel bug
  chain_step_not_unique,  // more than one eligible next index: kernel bug
  chain_did_not_terminate,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::inadmissible_rank: return "InadmissibleRank";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::bad_vector: return "BadVector";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_dominant: return "NotDominant";
    case Errc::bad_coroot_pairing: return "BadCorootPairing";
    case Errc::y_outside_hull: return "YOutsideHull";
    case Errc::chain_step_missing: return "ChainStepMissing";
    case Errc::chain_step_not_unique: return "ChainStepNotUnique";
    case Errc::chain_did_not_terminate: return "ChainDidNotTerminate";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace weylkit
