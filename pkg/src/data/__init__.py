"""
Report serialization and rendering.
"""
