// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/digit_cache.hpp"

#include "kfsum/errors.hpp"

#include <boost/crc.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace kfsum::pipeline {

namespace fs = std::filesystem;

std::uint32_t crc32_of(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  return crc.checksum();
}

namespace {

std::string body_of(int k, long digits, const std::string& alpha) {
  return "k=" + std::to_string(k) + "\ndigits=" + std::to_string(digits) + "\nalpha=" + alpha + "\n";
}

std::string hex(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

}  // namespace

DigitCache::DigitCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw ConfigError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path DigitCache::file_for(int k, long digits) const {
  return dir_ / ("alpha_k" + std::to_string(k) + "_d" + std::to_string(digits) + ".txt");
}

std::optional<std::string> DigitCache::load(int k, long digits) const {
  std::ifstream in(file_for(k, digits));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto crc_pos = text.rfind("crc32=");
  if (crc_pos == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, crc_pos);
  std::string stored = text.substr(crc_pos + 6);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != hex(crc32_of(body))) return std::nullopt;
  const std::string prefix = "k=" + std::to_string(k) + "\ndigits=" + std::to_string(digits) + "\nalpha=";
  if (body.rfind(prefix, 0) != 0 || body.back() != '\n') return std::nullopt;
  return body.substr(prefix.size(), body.size() - prefix.size() - 1);
}

void DigitCache::store(int k, long digits, const std::string& alpha) const {
  const std::string body = body_of(k, digits, alpha);
  const fs::path target = file_for(k, digits);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ConfigError("cannot write cache file " + tmp.string());
    out << body << "crc32=" << hex(crc32_of(body)) << "\n";
    if (!out.flush()) throw ConfigError("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw ConfigError("cannot move cache file into place: " + ec.message());
}

RootContext cached_root(const DigitCache* cache, int k, long digits, CacheOutcome* outcome) {
  auto report = [&](CacheOutcome o) {
    if (outcome) *outcome = o;
  };
  if (cache) {
    if (auto text = cache->load(k, digits)) {
      try {
        RootContext ctx = dominant_root_from_digits(k, digits, *text);
        report(CacheOutcome::hit);
        return ctx;
      } catch (const PrecisionError&) {
        report(CacheOutcome::rejected);
      } catch (const std::invalid_argument&) {
        report(CacheOutcome::rejected);
      }
    } else {
      report(CacheOutcome::miss);
    }
  } else {
    report(CacheOutcome::miss);
  }
  const std::string text = alpha_digits(dominant_root(k, digits), digits);
  if (cache) cache->store(k, digits, text);
  return dominant_root_from_digits(k, digits, text);
}

}  // namespace kfsum::pipeline
