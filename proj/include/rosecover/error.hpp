#pragma once

#include <stdexcept>
#include <string>

namespace rosecover {

enum class Errc {
  NotAGroup,
  UnsupportedFamily,
  Disconnected,
  NotACycle,
  PetalInLoop,
  DoesNotLift,
  ZeroVector,
  RankTooSmall,
  SearchExhausted,
  UnsupportedGroup,
  WrongRank,
  InvalidArgument,
  Parse,
};

const char *errc_name(Errc code) noexcept;

/// Every failure reported by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace rosecover
