#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ums {

/// Finds the first `<?xpacket begin ... <?xpacket end` packet and returns its simple property
/// values keyed ExifTool-style: CreatorTool, MetadataDate, DocumentID, HistoryWhen,
/// DerivedFromDocumentID, ... Values found inside rdf containers are joined with ", ".
/// ISO dates are shown as `YYYY:MM:DD hh:mm:ss+hh:mm`.
std::vector<std::pair<std::string, std::string>> scan_xmp(std::string_view bytes);

}  // namespace ums
