#include "monocheck/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

namespace monocheck::cli {

std::string format_factorization(const FactoredInt& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return first ? "1" : os.str();
}

std::optional<FactoredInt> parse_factorization(const Integer& value, const std::string& text) {
  if (value < 1) return std::nullopt;
  FactoredInt f;
  f.value = value;
  if (text == "1") return value == 1 ? std::optional<FactoredInt>(f) : std::nullopt;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '*')) {
    const auto caret = term.find('^');
    const std::string base = term.substr(0, caret);
    unsigned long e = 1;
    if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    if (caret != std::string::npos) {
      const std::string ex = term.substr(caret + 1);
      if (ex.empty() || ex.size() > 6 || ex.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
      e = std::stoul(ex);
      if (e == 0) return std::nullopt;
    }
    const Integer p(base);
    if (!is_prime(p)) return std::nullopt;
    f.factors[p] += static_cast<unsigned>(e);
  }
  if (f.reassemble() != value) return std::nullopt;
  return f;
}

const Integer& FileFactorCache::min_stored_value() {
  static const Integer v = from_u64(kTrialDivisionBound) * from_u64(kTrialDivisionBound);
  return v;
}

FileFactorCache::FileFactorCache(std::string path, std::ostream* warnings) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    std::optional<FactoredInt> parsed;
    if (tab != std::string::npos && tab > 0 && line.find_first_not_of("0123456789", 0) == tab) {
      const Integer n(line.substr(0, tab));
      parsed = parse_factorization(n, line.substr(tab + 1));
    }
    if (!parsed) {
      ++skipped_;
      if (warnings) *warnings << "warning: " << path_ << ":" << lineno << ": skipping corrupt cache line\n";
      continue;
    }
    memo_[parsed->value] = std::move(*parsed);
  }
}

std::optional<FactoredInt> FileFactorCache::lookup(const Integer& abs_value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(abs_value);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void FileFactorCache::store(const FactoredInt& f) {
  if (!f.complete() || f.value < min_stored_value()) return;
  const Integer key = abs(f.value);
  std::lock_guard<std::mutex> lock(mu_);
  if (!memo_.emplace(key, f).second) return;
  const std::string line = key.get_str() + "\t" + format_factorization(f) + "\n";
  const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) return;
  ::flock(fd, LOCK_EX);
  const char* data = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    const ssize_t w = ::write(fd, data, left);
    if (w <= 0) break;
    data += w;
    left -= static_cast<std::size_t>(w);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

std::size_t FileFactorCache::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

}  // namespace monocheck::cli
