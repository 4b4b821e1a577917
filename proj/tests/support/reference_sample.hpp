#pragma once

// The seven-row reference field sample (satellites, SNR, RSS, entrance,
// signed distance, note).

#include <string>
#include <vector>

#include "entrance/features.hpp"
#include "entrance/reading.hpp"

namespace entrance::testing {

inline const char* const kReferenceCsv =
    "num_satellites,snr_db,rss_dbm,entrance,distance_m,note\r\n"
    "20,33,-60,No,10,Outside\r\n"
    "14,30,-66,No,8,Outside\r\n"
    "23,28,-62,No,4,Outside\r\n"
    "15,20,-57,No,2,Outside\r\n"
    "9,19,-54,Yes,0,Entrance\r\n"
    "8,15,-44,No,-2,Inside\r\n"
    "4,14,-31,No,-4,Inside\r\n";

inline std::vector<SensorReading> reference_readings() {
  auto row = [](int sats, double snr, double rss, bool entrance, double d, Label note) {
    return SensorReading{sats, snr, rss, d, entrance, note};
  };
  return {
      row(20, 33, -60, false, 10, Label::kOutside), row(14, 30, -66, false, 8, Label::kOutside),
      row(23, 28, -62, false, 4, Label::kOutside),  row(15, 20, -57, false, 2, Label::kOutside),
      row(9, 19, -54, true, 0, Label::kEntrance),   row(8, 15, -44, false, -2, Label::kInside),
      row(4, 14, -31, false, -4, Label::kInside),
  };
}

inline Dataset reference_dataset() { return dataset_from_readings(reference_readings()); }

}  // namespace entrance::testing
