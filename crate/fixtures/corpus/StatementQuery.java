import java.sql.*;

class StatementQuery {
    void run(Connection c) throws SQLException {
        Statement st = c.createStatement();
        ResultSet rs = st.executeQuery("SELECT id, email FROM customer");
        while (rs.next()) {
            long id = rs.getLong(1);
            String email = rs.getString("email");
        }
    }
}
