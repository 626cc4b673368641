#pragma once

// Verdict-carrying findings and the plain-text report document.
//
// Report layout (one block per section):
//
//   == <heading>
//   <free text lines>
//   <VERDICT> <check-id>: <detail> witness: <witness>
//
// followed by a trailer `verdict: <worst>`. Every FAIL and DISAGREE line
// carries a witness.

#include <ostream>
#include <string>
#include <vector>

namespace nearsemi {

  enum class Verdict { pass, agree, info, disagree, fail };

  char const* to_string(Verdict v) noexcept;

  //! True for verdicts that make a command exit with status 1.
  inline bool is_adverse(Verdict v) noexcept {
    return v == Verdict::disagree || v == Verdict::fail;
  }

  struct Finding {
    std::string id;
    Verdict     verdict;
    std::string detail;
    std::string witness;
  };

  Finding pass(std::string id, std::string detail = {});
  Finding fail(std::string id, std::string detail, std::string witness);

  //! Worst verdict in a list of findings (pass when empty).
  Verdict worst(std::vector<Finding> const& findings) noexcept;

  bool all_pass(std::vector<Finding> const& findings) noexcept;

  struct Section {
    std::string              heading;
    std::vector<std::string> lines;
    std::vector<Finding>     findings;
  };

  class Report {
   public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    Section& add_section(std::string heading);

    std::vector<Section> const& sections() const noexcept {
      return sections_;
    }

    Verdict worst_verdict() const noexcept;

    //! 0 when no adverse verdict is present, 1 otherwise.
    int exit_status() const noexcept;

    void render(std::ostream& os) const;

   private:
    std::string          command_;
    std::vector<Section> sections_;
  };

}  // namespace nearsemi
