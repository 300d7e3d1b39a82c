#pragma once

#include "fracto/io/workspace.hpp"

namespace support {

inline const fracto::Workspace& basic()
{
    static const fracto::Workspace ws = fracto::load_workspace(FRACTO_DATA_DIR "/basic.json");
    return ws;
}

inline const fracto::GroupoidPtr& G(const char* id) { return basic().groupoid(id); }
inline const fracto::GroupoidFunctor& F(const char* id) { return basic().functor(id); }
inline const fracto::NatTransformation& T(const char* id) { return basic().transformation(id); }
inline const fracto::Span& S(const char* id) { return basic().span(id); }
inline const fracto::TwoCellDiagram& D(const char* id) { return basic().diagram(id); }

}
