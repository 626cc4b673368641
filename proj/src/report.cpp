#include "nearsemi/report.hpp"

#include <algorithm>

namespace nearsemi {

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "PASS";
      case Verdict::agree:
        return "AGREE";
      case Verdict::info:
        return "INFO";
      case Verdict::disagree:
        return "DISAGREE";
      case Verdict::fail:
        return "FAIL";
    }
    return "?";
  }

  Finding pass(std::string id, std::string detail) {
    return Finding{std::move(id), Verdict::pass, std::move(detail), {}};
  }

  Finding fail(std::string id, std::string detail, std::string witness) {
    return Finding{std::move(id), Verdict::fail, std::move(detail), std::move(witness)};
  }

  Verdict worst(std::vector<Finding> const& findings) noexcept {
    Verdict w = Verdict::pass;
    for (auto const& f : findings) {
      w = std::max(w, f.verdict);
    }
    return w;
  }

  bool all_pass(std::vector<Finding> const& findings) noexcept {
    return std::none_of(
        findings.begin(), findings.end(), [](Finding const& f) { return is_adverse(f.verdict); });
  }

  Section& Report::add_section(std::string heading) {
    sections_.push_back(Section{std::move(heading), {}, {}});
    return sections_.back();
  }

  Verdict Report::worst_verdict() const noexcept {
    Verdict w = Verdict::pass;
    for (auto const& s : sections_) {
      w = std::max(w, worst(s.findings));
    }
    return w;
  }

  int Report::exit_status() const noexcept {
    return is_adverse(worst_verdict()) ? 1 : 0;
  }

  void Report::render(std::ostream& os) const {
    os << "command: " << command_ << '\n';
    for (auto const& s : sections_) {
      os << "\n== " << s.heading << '\n';
      for (auto const& line : s.lines) {
        os << line << '\n';
      }
      for (auto const& f : s.findings) {
        os << to_string(f.verdict) << ' ' << f.id;
        if (!f.detail.empty()) {
          os << ": " << f.detail;
        }
        if (!f.witness.empty()) {
          os << " witness: " << f.witness;
        }
        os << '\n';
      }
    }
    os << "\nverdict: " << to_string(worst_verdict()) << '\n';
  }

}  // namespace nearsemi
