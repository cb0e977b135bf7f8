#pragma once

#define BRAIDFRAME_VERSION "0.1.0"
