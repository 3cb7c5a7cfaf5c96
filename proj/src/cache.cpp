#include "hall/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hall {

namespace {

// FNV-1a, 64 bit
uint64_t checksum(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string header(const Engine& e, const DimVector& d) {
  return std::string(kHallTableVersion) + "\nengine " + engine_cache_key(e) + "\nq " + std::to_string(e.q()) +
         "\ngrade " + dim_to_string(d) + "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string engine_cache_key(const Engine& e) {
  if (dynamic_cast<const NilpotentCyclicEngine*>(&e)) return "nil-" + e.id();
  if (dynamic_cast<const BruteForceEngine*>(&e)) return "brute-" + e.id();
  return e.id();
}

std::string serialize_tables(const Engine& e, const DimVector& d, const GradeTables& tables) {
  std::string body = header(e, d);
  for (const auto& [L, t] : tables) {
    body += "L " + e.render(L) + "\n";
    for (const auto& [key, n] : t) body += e.render(key.first) + "\t" + e.render(key.second) + "\t" + std::to_string(n) + "\n";
  }
  body += "end\n";
  return body + "checksum " + hex(checksum(body)) + "\n";
}

std::optional<GradeTables> parse_tables(const Engine& e, const DimVector& d, const std::string& text) {
  size_t cpos = text.rfind("checksum ");
  if (cpos == std::string::npos || (cpos > 0 && text[cpos - 1] != '\n')) return std::nullopt;
  std::string body = text.substr(0, cpos);
  if (text.substr(cpos) != "checksum " + hex(checksum(body)) + "\n") return std::nullopt;
  std::string head = header(e, d);
  if (body.compare(0, head.size(), head) != 0) return std::nullopt;

  try {
    GradeTables out;
    HallTable* cur = nullptr;
    bool ended = false;
    for (const std::string& line : split(body.substr(head.size()), '\n')) {
      if (line.empty()) continue;
      if (ended) return std::nullopt;
      if (line == "end") {
        ended = true;
      } else if (line.rfind("L ", 0) == 0) {
        IsoClass L = e.parse_class(line.substr(2));
        if (L.grade != d) return std::nullopt;
        auto [it, fresh] = out.emplace(L, HallTable{});
        if (!fresh) return std::nullopt;
        cur = &it->second;
      } else {
        auto f = split(line, '\t');
        if (!cur || f.size() != 3) return std::nullopt;
        IsoClass M = e.parse_class(f[0]), N = e.parse_class(f[1]);
        long n = std::stol(f[2]);
        if (n <= 0 || dim_add(M.grade, N.grade) != d) return std::nullopt;
        if (!cur->emplace(std::make_pair(M, N), n).second) return std::nullopt;
      }
    }
    if (!ended || out.size() != e.classes(d).size()) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

FileHallStore::FileHallStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_) || access(dir_.c_str(), W_OK) != 0)
    throw std::invalid_argument("cache directory " + dir_.string() + " is not writable");
}

std::filesystem::path FileHallStore::path_for(const Engine& e, const DimVector& d) const {
  std::string g;
  for (int x : d) g += (g.empty() ? "" : "-") + std::to_string(x);
  return dir_ / (engine_cache_key(e) + "_q" + std::to_string(e.q()) + "_d" + g + ".tbl");
}

std::optional<GradeTables> FileHallStore::load(const Engine& e, const DimVector& d) {
  std::ifstream in(path_for(e, d), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  auto t = parse_tables(e, d, ss.str());
  if (t) {
    ++hits_;
  } else {
    ++rejected_;
  }
  return t;
}

void FileHallStore::save(const Engine& e, const DimVector& d, const GradeTables& tables) {
  auto target = path_for(e, d);
  std::ostringstream tag;
  tag << ".tmp." << getpid() << "." << std::this_thread::get_id();
  auto tmp = target;
  tmp += tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize_tables(e, d, tables);
    if (!out) {
      std::cerr << "warning: could not write cache file " << tmp << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::cerr << "warning: could not install cache file " << target << ": " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace hall
