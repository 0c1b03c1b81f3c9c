#pragma once

#include <exception>
#include <mutex>

namespace degseq {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path is what the tests compare against.
enum class Execution { serial, parallel };

/// Collects the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread (exceptions may not cross the region).
class ExceptionSlot {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_)
                error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

} // namespace degseq
