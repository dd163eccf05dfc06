#pragma once

#include "stardiff/error.hpp"
#include "stardiff/simplicial.hpp"
#include "stardiff/field.hpp"
#include "stardiff/face_ring.hpp"
#include "stardiff/weyl.hpp"
#include "stardiff/dideals.hpp"
#include "stardiff/frobenius.hpp"
#include "stardiff/io.hpp"
