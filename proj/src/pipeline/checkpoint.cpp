// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "kfsum/pipeline/checkpoint.hpp"

#include "kfsum/errors.hpp"
#include "kfsum/pipeline/digit_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kfsum::pipeline {

namespace fs = std::filesystem;

namespace {

std::string hex(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

}  // namespace

Checkpoint::Checkpoint(fs::path file, bool fresh) : file_(std::move(file)) {
  std::error_code ec;
  if (file_.has_parent_path()) fs::create_directories(file_.parent_path(), ec);
  if (fresh) {
    std::ofstream(file_, std::ios::trunc);
    return;
  }
  std::ifstream in(file_, std::ios::binary);
  if (!in) return;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::size_t pos = 0;
  long line_no = 0;
  std::string valid;  // complete lines, rewritten if a torn tail is dropped
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) break;  // torn tail
    const std::string line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    const auto first = line.find(' ');
    const auto last = line.rfind(' ');
    if (first == std::string::npos || first == last) {
      throw ConfigError("checkpoint " + file_.string() + " line " + std::to_string(line_no) + " is malformed");
    }
    const std::string head = line.substr(0, last);
    if (line.substr(last + 1) != hex(crc32_of(head))) {
      throw ConfigError("checkpoint " + file_.string() + " line " + std::to_string(line_no) +
                        " fails its checksum");
    }
    int k = 0;
    try {
      k = std::stoi(line.substr(0, first));
    } catch (const std::exception&) {
      throw ConfigError("checkpoint " + file_.string() + " line " + std::to_string(line_no) + " has a bad k");
    }
    done_[k] = line.substr(first + 1, last - first - 1);
    valid += line + "\n";
  }
  if (valid.size() != text.size()) {
    std::ofstream out(file_, std::ios::trunc | std::ios::binary);
    out << valid;
  }
}

void Checkpoint::append(int k, const std::string& payload) {
  if (payload.find('\n') != std::string::npos) throw std::invalid_argument("checkpoint payload has a newline");
  const std::string head = std::to_string(k) + " " + payload;
  std::lock_guard lock(mu_);
  std::ofstream out(file_, std::ios::app | std::ios::binary);
  out << head << ' ' << hex(crc32_of(head)) << '\n';
  out.flush();
  if (!out) throw ConfigError("cannot append to checkpoint " + file_.string());
  done_[k] = payload;
}

}  // namespace kfsum::pipeline
