#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "catalan/lfunc.hpp"

namespace catalan {

inline constexpr int kCacheVersion = 1;

/// Append-only text cache of PrimeTrace records for one curve.
///
///   #catalan <p> <q> <version>
///   <ell>,<t1>[,<t2>]
///
/// Lines are ascending in ell and newline-terminated. Loading stops at the
/// first malformed or out-of-order line and truncates the file there.
class TraceCache {
public:
  using Warn = std::function<void(const std::string &)>;

  TraceCache(std::filesystem::path file, const CatalanParams &params, Warn warn = {});

  static std::filesystem::path pathFor(const std::filesystem::path &dir, const CatalanParams &params);

  const std::filesystem::path &file() const { return file_; }
  std::string header() const;

  /// Reads valid records, repairing the file as described above.
  std::map<std::uint64_t, PrimeTrace> load();

  static std::string formatLine(const PrimeTrace &trace);
  /// Parses one record line; nullopt when malformed.
  static std::optional<PrimeTrace> parseLine(const std::string &line);

private:
  std::filesystem::path file_;
  CatalanParams params_;
  Warn warn_;
};

/// Single-owner writer for a cache file. Producers call push() from any
/// thread; records are written in the ascending order given at construction.
/// Records in `prefilled` are written without being pushed.
class TraceCacheWriter {
public:
  enum class Mode { Append, Rewrite };

  TraceCacheWriter(const TraceCache &cache, Mode mode, std::vector<std::uint64_t> order,
                   std::map<std::uint64_t, PrimeTrace> prefilled);
  ~TraceCacheWriter();

  TraceCacheWriter(const TraceCacheWriter &) = delete;
  TraceCacheWriter &operator=(const TraceCacheWriter &) = delete;

  void push(PrimeTrace trace);
  /// Blocks until every record in the order has been written; a rewrite is
  /// moved into place only here.
  void finish();

private:
  void run();

  std::filesystem::path target_;
  std::filesystem::path out_path_;
  Mode mode_;
  std::ofstream out_;
  std::vector<std::uint64_t> order_;
  std::map<std::uint64_t, PrimeTrace> pending_;

  std::mutex mutex_;
  std::condition_variable cv_;
  std::deque<PrimeTrace> queue_;
  bool closing_ = false;
  bool finished_ = false;
  std::thread thread_;
};

} // namespace catalan
