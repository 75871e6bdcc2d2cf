#include "catalan/trace_cache.hpp"

#include <charconv>
#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

namespace fs = std::filesystem;

TraceCache::TraceCache(fs::path file, const CatalanParams &params, Warn warn)
    : file_(std::move(file)), params_(params), warn_(std::move(warn)) {}

fs::path TraceCache::pathFor(const fs::path &dir, const CatalanParams &params) {
  return dir / ("catalan-" + std::to_string(params.p) + "-" + std::to_string(params.q) + ".cache");
}

std::string TraceCache::header() const {
  return "#catalan " + std::to_string(params_.p) + " " + std::to_string(params_.q) + " " +
         std::to_string(kCacheVersion);
}

std::string TraceCache::formatLine(const PrimeTrace &trace) {
  std::string line = std::to_string(trace.ell) + "," + std::to_string(trace.t1());
  if (auto t2 = trace.t2()) line += "," + std::to_string(*t2);
  return line;
}

std::optional<PrimeTrace> TraceCache::parseLine(const std::string &line) {
  std::vector<std::string_view> fields;
  std::string_view rest = line;
  while (true) {
    const auto comma = rest.find(',');
    fields.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (fields.size() != 2 && fields.size() != 3) return std::nullopt;
  auto parse = [](std::string_view s, auto &value) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  std::uint64_t ell = 0;
  std::int64_t t1 = 0;
  if (!parse(fields[0], ell) || !parse(fields[1], t1)) return std::nullopt;
  std::optional<std::int64_t> t2;
  if (fields.size() == 3) {
    std::int64_t v = 0;
    if (!parse(fields[2], v)) return std::nullopt;
    t2 = v;
  }
  return PrimeTrace::fromTraces(ell, t1, t2);
}

std::map<std::uint64_t, PrimeTrace> TraceCache::load() {
  std::map<std::uint64_t, PrimeTrace> records;
  auto resetFile = [&] {
    fs::create_directories(file_.parent_path().empty() ? fs::path(".") : file_.parent_path());
    std::ofstream out(file_, std::ios::trunc);
    out << header() << '\n';
    if (!out) throw ComputationError("cannot write cache file " + file_.string());
  };
  if (!fs::exists(file_)) {
    resetFile();
    return records;
  }

  std::ifstream in(file_, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  in.close();

  const auto headerEnd = content.find('\n');
  if (headerEnd == std::string::npos || content.substr(0, headerEnd) != header()) {
    if (warn_) warn_("cache " + file_.string() + ": header mismatch, discarding contents");
    resetFile();
    return records;
  }

  std::size_t offset = headerEnd + 1;
  std::size_t lineNo = 1;
  std::uint64_t last = 0;
  while (offset < content.size()) {
    ++lineNo;
    const auto end = content.find('\n', offset);
    std::string reason;
    std::optional<PrimeTrace> trace;
    if (end == std::string::npos) {
      reason = "unterminated line";
    } else {
      trace = parseLine(content.substr(offset, end - offset));
      if (!trace)
        reason = "malformed line";
      else if (trace->ell <= last)
        reason = "out-of-order prime";
      else if (!isGoodPrime(params_, trace->ell))
        reason = "not a good prime";
      else if (!satisfiesWeilBound(params_, *trace))
        reason = "violates the Weil bound";
    }
    if (!reason.empty()) {
      if (warn_)
        warn_("cache " + file_.string() + ": " + reason + " at line " + std::to_string(lineNo) +
              ", truncating " + std::to_string(content.size() - offset) + " trailing bytes");
      fs::resize_file(file_, offset);
      break;
    }
    last = trace->ell;
    records.emplace(trace->ell, *trace);
    offset = end + 1;
  }
  return records;
}

TraceCacheWriter::TraceCacheWriter(const TraceCache &cache, Mode mode,
                                   std::vector<std::uint64_t> order,
                                   std::map<std::uint64_t, PrimeTrace> prefilled)
    : target_(cache.file()), mode_(mode), order_(std::move(order)), pending_(std::move(prefilled)) {
  if (mode_ == Mode::Append) {
    out_path_ = target_;
    out_.open(out_path_, std::ios::app);
  } else {
    out_path_ = target_;
    out_path_ += ".tmp";
    out_.open(out_path_, std::ios::trunc);
    out_ << cache.header() << '\n';
  }
  if (!out_) throw ComputationError("cannot open cache file " + out_path_.string());
  thread_ = std::thread([this] { run(); });
}

TraceCacheWriter::~TraceCacheWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void TraceCacheWriter::push(PrimeTrace trace) {
  {
    std::lock_guard lock(mutex_);
    queue_.push_back(std::move(trace));
  }
  cv_.notify_one();
}

void TraceCacheWriter::run() {
  std::size_t next = 0;
  std::size_t sinceFlush = 0;
  while (true) {
    while (next < order_.size()) {
      auto it = pending_.find(order_[next]);
      if (it == pending_.end()) break;
      out_ << TraceCache::formatLine(it->second) << '\n';
      pending_.erase(it);
      ++next;
      if (++sinceFlush >= 256) {
        out_.flush();
        sinceFlush = 0;
      }
    }
    if (next == order_.size()) break;
    std::deque<PrimeTrace> batch;
    {
      std::unique_lock lock(mutex_);
      cv_.wait(lock, [&] { return !queue_.empty() || closing_; });
      if (queue_.empty() && closing_) break;
      batch.swap(queue_);
    }
    for (auto &t : batch) pending_.insert_or_assign(t.ell, std::move(t));
  }
  out_.flush();
  std::lock_guard lock(mutex_);
  finished_ = next == order_.size();
}

void TraceCacheWriter::finish() {
  if (!thread_.joinable()) return;
  {
    std::lock_guard lock(mutex_);
    closing_ = true;
  }
  cv_.notify_one();
  thread_.join();
  out_.close();
  if (mode_ == Mode::Rewrite) {
    if (finished_)
      fs::rename(out_path_, target_);
    else
      fs::remove(out_path_);
  }
  if (!finished_) throw ComputationError("cache writer stopped before all records were written");
}

} // namespace catalan
