#ifndef TORIMULT_CANCEL_HPP
#define TORIMULT_CANCEL_HPP

#include <functional>

namespace torimult {

/// Cooperative cancellation for long-running searches. Callers poll; a fired
/// token makes the search throw Error("TIMEOUT", ...).
class CancelToken {
public:
  CancelToken() = default;
  explicit CancelToken(std::function<bool()> pred) : pred_(std::move(pred)) {}
  bool cancelled() const { return pred_ && pred_(); }
  static const CancelToken& none() {
    static CancelToken t;
    return t;
  }

private:
  std::function<bool()> pred_;
};

} // namespace torimult

#endif
