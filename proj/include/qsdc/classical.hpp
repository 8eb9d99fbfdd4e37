#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsdc/bell.hpp"

namespace qsdc {

enum class MessageKind : std::uint8_t {
  MeasurementDone,      // "I measured", no outcome attached
  ResultsRequest,       // receiver asks for the outcomes
  ResultsAnnouncement,  // one Bell outcome, public
};

/// One message on the in-process classical channel. The security-relevant
/// property is that nothing before the ResultsRequest carries an outcome.
struct ClassicalMessage {
  MessageKind kind;
  int sender;  // party id, 0 = receiver
  std::int64_t group_id;
  std::optional<BellOutcome> payload;

  static ClassicalMessage measurement_done(int sender, std::int64_t group_id) {
    return {MessageKind::MeasurementDone, sender, group_id, std::nullopt};
  }
  static ClassicalMessage results_request(std::int64_t group_id) {
    return {MessageKind::ResultsRequest, 0, group_id, std::nullopt};
  }
  static ClassicalMessage results_announcement(int sender, std::int64_t group_id,
                                               BellOutcome outcome) {
    return {MessageKind::ResultsAnnouncement, sender, group_id, outcome};
  }
};

/// Walks a message log and checks that no outcome payload appears before the
/// receiver's ResultsRequest and that payloads sit only on announcements.
bool leaks_before_request(const std::vector<ClassicalMessage>& log);

/// Receiver-side ordering guard for one group: announcements may be requested
/// only after all M MeasurementDone notices arrived and the receiver's own
/// Bell measurement is recorded.
class ReceiverStateMachine {
 public:
  explicit ReceiverStateMachine(int num_senders)
      : pending_(num_senders, false), announced_(num_senders, false) {}

  void on_measurement_done(int sender);
  void on_own_measurement();
  bool ready_to_request() const;
  /// Throws std::logic_error when called before ready_to_request().
  void request_results();
  void on_announcement(int sender);

  bool all_announced() const;

 private:
  std::vector<bool> pending_;  // MeasurementDone seen, per sender (index k-1)
  std::vector<bool> announced_;
  bool own_measured_ = false;
  bool requested_ = false;
};

}  // namespace qsdc
