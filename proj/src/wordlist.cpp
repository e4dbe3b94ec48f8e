#include "dgad/wordlist.hpp"

#include <array>

namespace dgad {

namespace {

constexpr std::array<std::string_view, 200> kWords = {
    "cloud",  "data",   "shop",   "news",    "blog",    "tech",   "game",   "play",
    "music",  "video",  "photo",  "mail",    "chat",    "talk",   "link",   "site",
    "page",   "home",   "search", "store",   "market",  "trade",  "bank",   "money",
    "cash",   "coin",   "smart",  "fast",    "easy",    "quick",  "super",  "mega",
    "ultra",  "prime",  "star",   "moon",    "blue",    "green",  "black",  "white",
    "gold",   "silver", "iron",   "stone",   "rock",    "river",  "lake",   "ocean",
    "wave",   "wind",   "storm",  "rain",    "snow",    "fire",   "light",  "dark",
    "bright", "clear",  "fresh",  "pure",    "true",    "real",   "live",   "life",
    "love",   "happy",  "lucky",  "magic",   "dream",   "idea",   "mind",   "brain",
    "think",  "learn",  "study",  "school",  "craft",   "work",   "team",   "group",
    "club",   "party",  "event",  "travel",  "world",   "globe",  "city",   "town",
    "house",  "point",  "power",  "energy",  "solar",   "metal",  "paper",  "glass",
    "brick",  "candle", "garden", "pixel",   "apple",   "orange", "lemon",  "grape",
    "peach",  "berry",  "melon",  "mango",   "cherry",  "olive",  "bread",  "cheese",
    "butter", "honey",  "sugar",  "salt",    "pepper",  "spice",  "coffee", "juice",
    "water",  "milk",   "wine",   "cake",    "cookie",  "candy",  "sweet",  "fruit",
    "plant",  "tree",   "leaf",   "root",    "seed",    "flower", "field",  "farm",
    "forest", "hill",   "valley", "mountain","desert",  "island", "beach",  "coast",
    "north",  "south",  "east",   "west",    "spring",  "summer", "autumn", "winter",
    "morning","evening","night",  "week",    "month",   "year",   "time",   "clock",
    "watch",  "phone",  "tablet", "screen",  "mouse",   "board",  "key",    "lock",
    "door",   "window", "wall",   "floor",   "roof",    "bridge", "road",   "street",
    "path",   "track",  "trail",  "tower",   "castle",  "ship",   "boat",   "plane",
    "train",  "wheel",  "engine", "motor",   "speed",   "race",   "sport",  "ball",
    "goal",   "score",  "win",    "match",   "level",   "stage",  "hero",   "quest",
};

} // namespace

std::span<const std::string_view> embedded_wordlist() { return kWords; }

} // namespace dgad
