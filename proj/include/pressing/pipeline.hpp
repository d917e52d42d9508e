#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pressing {

// Frame-parallel map with ordered merge: jobs are submitted with a
// monotonically increasing sequence number, run on a small worker pool,
// and their string results are handed to the sink strictly in submission
// order. Submission blocks once `capacity` jobs are in flight, which keeps
// memory bounded for arbitrarily long streams. workers == 1 runs inline on
// the submitting thread (the sequential reference path).
class OrderedParallelRunner {
 public:
  using Job = std::function<std::string()>;
  using Sink = std::function<void(const std::string&)>;

  // workers: 0 = hardware concurrency. capacity: 0 = 4 * workers.
  OrderedParallelRunner(int workers, std::size_t capacity, Sink sink);
  ~OrderedParallelRunner();

  OrderedParallelRunner(const OrderedParallelRunner&) = delete;
  OrderedParallelRunner& operator=(const OrderedParallelRunner&) = delete;

  void submit(Job job);

  // Waits for all submitted jobs to be flushed to the sink. Rethrows the
  // first job exception, if any.
  void finish();

  int workers() const { return workers_; }
  std::size_t max_in_flight() const { return max_in_flight_; }

 private:
  struct Slot;

  void worker_loop();
  void flush_ready_locked();

  int workers_;
  std::size_t capacity_;
  Sink sink_;

  std::mutex mutex_;
  std::condition_variable job_available_;
  std::condition_variable slot_available_;
  std::vector<Slot> ring_;
  std::size_t next_seq_ = 0;     // next sequence number to assign
  std::size_t next_flush_ = 0;   // next sequence number to hand to the sink
  std::size_t next_claim_ = 0;   // next sequence number a worker may claim
  std::size_t max_in_flight_ = 0;
  bool done_ = false;
  std::exception_ptr first_error_;
  std::vector<std::thread> threads_;
};

}  // namespace pressing
