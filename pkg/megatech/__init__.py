##
# @file __init__.py
# @brief Package Initializer
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
