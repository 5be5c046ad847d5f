#ifndef BOXLAB_CORE_ERROR_HPP
#define BOXLAB_CORE_ERROR_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace boxlab {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph/poset/decomposition/certificate files).
class parse_error : public error {
public:
  using error::error;
};

// Inconsistent objects: box lengths, vertex coverage, invalid decompositions.
class structural_error : public error {
public:
  using error::error;
};

// A precondition on numeric parameters does not hold.
class parameter_error : public error {
public:
  using error::error;
};

// A randomized construction exhausted its retry or resampling cap.
class randomized_failure : public error {
public:
  randomized_failure(const std::string& what, std::uint64_t attempts)
      : error(what + " (gave up after " + std::to_string(attempts) + " attempts)"),
        attempts_(attempts) {}

  std::uint64_t attempts() const noexcept { return attempts_; }

private:
  std::uint64_t attempts_;
};

inline constexpr std::uint64_t default_retry_cap = 64;

// Retry cap for whole-object rebuilds; BOXLAB_RETRY_CAP overrides it.
inline std::uint64_t retry_cap() {
  if (const char* env = std::getenv("BOXLAB_RETRY_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return default_retry_cap;
}

} // namespace boxlab

#endif // BOXLAB_CORE_ERROR_HPP
