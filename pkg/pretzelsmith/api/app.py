"""
Flask application factory for the PretzelSmith REST API.

This module creates the Flask application with CORS support and registers
the API blueprint.
"""

from flask import Flask
from flask_cors import CORS


def create_app() -> Flask:
    """
    Create and configure the Flask application.

    Returns:
        Configured Flask application instance
    """
    app = Flask(__name__)

    # Enable CORS for browser clients
    CORS(app)

    # Register API blueprint
    from pretzelsmith.api.routes import api_bp  # pylint: disable=import-outside-toplevel

    app.register_blueprint(api_bp, url_prefix="/api")

    return app
