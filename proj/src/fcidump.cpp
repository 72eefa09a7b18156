// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcc/integrals.hpp"

namespace qcc {
namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool parse_int(const std::string& tok, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_real(std::string tok, double& out) {
  // Fortran writers may use D exponents.
  for (auto& c : tok)
    if (c == 'D' || c == 'd') c = 'E';
  try {
    std::size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct Header {
  std::map<std::string, std::vector<std::string>> values;
  int end_line = 0;
};

// Reads the namelist up to "/" or "&END"; returns with `is` positioned at
// the first record line.
Header read_header(std::istream& is, int& line_no) {
  Header h;
  std::string text;
  std::string line;
  bool started = false, finished = false;
  while (!finished && std::getline(is, line)) {
    ++line_no;
    std::string u = upper(line);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw FcidumpError(line_no, "expected '&FCI' namelist header");
      }
      started = true;
      u = u.substr(pos + 4);
    }
    auto end_pos = u.find("&END");
    const auto slash = u.find('/');
    if (slash != std::string::npos &&
        (end_pos == std::string::npos || slash < end_pos)) {
      end_pos = slash;
    }
    if (end_pos != std::string::npos) {
      u = u.substr(0, end_pos);
      finished = true;
    }
    text += ' ';
    text += u;
  }
  if (!started) throw FcidumpError(line_no, "missing '&FCI' header");
  if (!finished) throw FcidumpError(line_no, "unterminated namelist header");
  h.end_line = line_no;

  for (auto& c : text)
    if (c == ',') c = ' ';
  std::istringstream ts(text);
  std::string tok, key;
  while (ts >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      key = tok.substr(0, eq);
      if (key.empty()) throw FcidumpError(line_no, "header has '=' without key");
      h.values[key];
      const std::string rest = tok.substr(eq + 1);
      if (!rest.empty()) h.values[key].push_back(rest);
    } else if (tok == "=") {
      continue;
    } else {
      if (key.empty()) {
        throw FcidumpError(line_no, "header value without key: " + tok);
      }
      h.values[key].push_back(tok);
    }
  }
  return h;
}

int header_int(const Header& h, const std::string& key, int fallback,
               bool required) {
  auto it = h.values.find(key);
  if (it == h.values.end() || it->second.empty()) {
    if (required) throw FcidumpError(h.end_line, "header lacks " + key);
    return fallback;
  }
  int v = 0;
  if (!parse_int(it->second.front(), v)) {
    throw FcidumpError(h.end_line, "header " + key + " is not an integer");
  }
  return v;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%24.16e", v);
  return buf;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& is) {
  int line_no = 0;
  const Header h = read_header(is, line_no);
  const int norb = header_int(h, "NORB", 0, true);
  const int nelec = header_int(h, "NELEC", 0, true);
  const int ms2 = header_int(h, "MS2", 0, false);
  if (norb <= 0) throw FcidumpError(h.end_line, "NORB must be positive");
  if (nelec < 0 || (nelec + ms2) % 2 != 0 || std::abs(ms2) > nelec) {
    throw FcidumpError(h.end_line, "NELEC and MS2 are inconsistent");
  }

  MolecularIntegrals mi;
  mi.n_spatial = norb;
  mi.n_alpha = (nelec + ms2) / 2;
  mi.n_beta = (nelec - ms2) / 2;
  if (mi.n_alpha > norb || mi.n_beta > norb) {
    throw FcidumpError(h.end_line, "more electrons than spin orbitals");
  }
  mi.one_body = Eigen::MatrixXd::Zero(norb, norb);
  mi.two_body = TwoBodyTensor(norb);
  mi.orbital_energies = Eigen::VectorXd::Zero(norb);
  std::vector<bool> have_energy(norb, false);

  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;
    double v = 0.0;
    if (!parse_real(vtok, v)) {
      throw FcidumpError(line_no, "non-numeric value '" + vtok + "'");
    }
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      std::string t;
      if (!(ls >> t) || !parse_int(t, idx[k])) {
        throw FcidumpError(line_no, "expected four integer indices");
      }
      if (idx[k] < 0 || idx[k] > norb) {
        throw FcidumpError(line_no, "index " + std::to_string(idx[k]) +
                                        " out of range 0.." +
                                        std::to_string(norb));
      }
    }
    std::string extra;
    if (ls >> extra) throw FcidumpError(line_no, "trailing data '" + extra + "'");
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mi.core_energy = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      mi.two_body.set_symmetric(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      mi.one_body(i - 1, j - 1) = v;
      mi.one_body(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      mi.orbital_energies(i - 1) = v;
      have_energy[i - 1] = true;
    } else {
      throw FcidumpError(line_no, "unrecognized index pattern");
    }
  }
  if (!std::all_of(have_energy.begin(), have_energy.end(),
                   [](bool b) { return b; })) {
    mi.orbital_energies =
        diagonal_fock(mi.one_body, mi.two_body, mi.n_alpha, mi.n_beta);
  }
  return mi;
}

void write_fcidump(const MolecularIntegrals& mi, std::ostream& os) {
  const int n = mi.n_spatial;
  os << "&FCI NORB=" << n << ",NELEC=" << (mi.n_alpha + mi.n_beta)
     << ",MS2=" << (mi.n_alpha - mi.n_beta) << ",\n ORBSYM=";
  for (int p = 0; p < n; ++p) os << "1,";
  os << "\n ISYM=1,\n&END\n";
  const auto& g = mi.two_body;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = g(i, j, k, l);
          if (v == 0.0) continue;
          os << format_value(v) << ' ' << i + 1 << ' ' << j + 1 << ' '
             << k + 1 << ' ' << l + 1 << '\n';
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = mi.one_body(i, j);
      if (v == 0.0) continue;
      os << format_value(v) << ' ' << i + 1 << ' ' << j + 1 << " 0 0\n";
    }
  for (int i = 0; i < n; ++i) {
    os << format_value(mi.orbital_energies(i)) << ' ' << i + 1 << " 0 0 0\n";
  }
  os << format_value(mi.core_energy) << " 0 0 0 0\n";
  if (!os) throw std::runtime_error("FCIDUMP write failed");
}

MolecularIntegrals read_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in);
}

void write_fcidump_file(const MolecularIntegrals& mi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write FCIDUMP file: " + path);
  write_fcidump(mi, out);
  out.flush();
  if (!out) throw std::runtime_error("FCIDUMP write failed: " + path);
}

}  // namespace qcc
